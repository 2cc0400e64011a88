#include "qce/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qce {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options) {
    const int n = static_cast<int>(start.size());
    std::vector<Eigen::VectorXd> simplex(n + 1, start);
    std::vector<double> values(n + 1);
    for (int i = 0; i < n; ++i) {
        simplex[i + 1](i) += options.initial_step;
    }
    for (int i = 0; i <= n; ++i) {
        values[i] = objective(simplex[i]);
    }

    std::vector<int> order(n + 1);
    NelderMeadResult result;
    for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return values[a] < values[b]; });
        const int best = order[0];
        const int worst = order[n];
        const int second_worst = order[n - 1];

        double diameter = 0.0;
        for (int i = 1; i <= n; ++i) {
            diameter = std::max(diameter, (simplex[order[i]] - simplex[best]).norm());
        }
        if (diameter < options.simplex_tolerance &&
            std::abs(values[worst] - values[best]) < options.value_tolerance) {
            result.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i) {
            if (i != worst) {
                centroid += simplex[i];
            }
        }
        centroid /= n;

        const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
        const double f_reflected = objective(reflected);
        if (f_reflected < values[best]) {
            const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else if (f_reflected < values[second_worst]) {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else {
            const Eigen::VectorXd contracted =
                centroid + 0.5 * (simplex[worst] - centroid);
            const double f_contracted = objective(contracted);
            if (f_contracted < values[worst]) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                for (int i = 0; i <= n; ++i) {  // shrink toward the best vertex
                    if (i == best) continue;
                    simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
                    values[i] = objective(simplex[i]);
                }
            }
        }
    }

    const int best =
        static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

Eigen::MatrixXcd isometry_from_parameters(const Eigen::VectorXd& params, int rows, int cols) {
    if (params.size() != isometry_parameter_count(rows) || cols > rows) {
        throw domain_error("isometry parameter vector has the wrong length");
    }
    // Hermitian H with A = iH; exp(A) = V diag(e^{i h}) V^dagger.
    MatrixXcd h = MatrixXcd::Zero(rows, rows);
    int idx = 0;
    for (int j = 0; j < rows; ++j) {
        h(j, j) = params(idx++);
    }
    for (int j = 0; j < rows; ++j) {
        for (int k = j + 1; k < rows; ++k) {
            const Complex value(params(idx), params(idx + 1));
            idx += 2;
            h(j, k) = value;
            h(k, j) = std::conj(value);
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
    VectorXcd phases(rows);
    for (int j = 0; j < rows; ++j) {
        phases(j) = std::exp(Complex(0.0, solver.eigenvalues()(j)));
    }
    const MatrixXcd unitary = solver.eigenvectors() * phases.asDiagonal() *
                              solver.eigenvectors().adjoint();
    return unitary.leftCols(cols);
}

Eigen::VectorXd parameters_from_isometry(const Eigen::MatrixXcd& isometry) {
    const int rows = static_cast<int>(isometry.rows());
    const int cols = static_cast<int>(isometry.cols());

    // Complete to a unitary by Gram-Schmidt against basis vectors.
    MatrixXcd unitary(rows, rows);
    unitary.leftCols(cols) = isometry;
    int filled = cols;
    for (int basis = 0; basis < rows && filled < rows; ++basis) {
        VectorXcd candidate = VectorXcd::Zero(rows);
        candidate(basis) = 1.0;
        for (int j = 0; j < filled; ++j) {
            candidate -= unitary.col(j).dot(candidate) * unitary.col(j);
        }
        const double norm = candidate.norm();
        if (norm > 1e-8) {
            unitary.col(filled++) = candidate / norm;
        }
    }
    if (filled < rows) {
        throw domain_error("could not complete isometry to a unitary");
    }

    // Log of a unitary via Schur: for a normal matrix T is diagonal and Q an
    // orthonormal eigenbasis, which stays safe under degenerate eigenphases.
    Eigen::ComplexSchur<MatrixXcd> schur(unitary);
    MatrixXcd h = MatrixXcd::Zero(rows, rows);
    for (int j = 0; j < rows; ++j) {
        const double phase = std::arg(schur.matrixT()(j, j));
        h += phase * (schur.matrixU().col(j) * schur.matrixU().col(j).adjoint());
    }
    h = 0.5 * (h + h.adjoint().eval());

    Eigen::VectorXd params(isometry_parameter_count(rows));
    int idx = 0;
    for (int j = 0; j < rows; ++j) {
        params(idx++) = h(j, j).real();
    }
    for (int j = 0; j < rows; ++j) {
        for (int k = j + 1; k < rows; ++k) {
            params(idx++) = h(j, k).real();
            params(idx++) = h(j, k).imag();
        }
    }
    return params;
}

}  // namespace qce
