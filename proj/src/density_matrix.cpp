#include "qce/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qce {

VectorXcd fix_phase(VectorXcd v, double cutoff) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > cutoff) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

namespace {

// Lexicographic order on (re, im) pairs, used only to break eigenvalue ties.
bool lex_less(const VectorXcd& a, const VectorXcd& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
}

}  // namespace

DensityMatrix::DensityMatrix(MatrixXcd matrix, const Tolerances& tol) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw invalid_state_error("density matrix must be square and non-empty");
    }
    const double herm_defect = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > tol.herm) {
        throw invalid_state_error("matrix is not Hermitian: max defect " +
                                  std::to_string(herm_defect));
    }
    const Complex trace = matrix_.trace();
    if (std::abs(trace - Complex(1.0, 0.0)) > tol.spec) {
        throw invalid_state_error("matrix trace is " + std::to_string(trace.real()) +
                                  (trace.imag() >= 0 ? "+" : "") + std::to_string(trace.imag()) +
                                  "i, expected 1");
    }

    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(matrix_);
    if (solver.info() != Eigen::Success) {
        throw invalid_state_error("eigendecomposition failed");
    }
    const int d = dim();
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    Eigen::VectorXd raw = solver.eigenvalues();
    MatrixXcd vecs(d, d);
    for (int i = 0; i < d; ++i) {
        vecs.col(i) = fix_phase(solver.eigenvectors().col(i));
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (std::abs(raw(a) - raw(b)) > 1e-12) return raw(a) > raw(b);
        return lex_less(vecs.col(a), vecs.col(b));
    });

    eigenvalues_.resize(d);
    eigenvectors_.resize(d, d);
    double sum = 0.0;
    for (int i = 0; i < d; ++i) {
        double lambda = raw(order[i]);
        if (lambda < -tol.psd) {
            throw invalid_state_error("matrix has negative eigenvalue " + std::to_string(lambda));
        }
        if (lambda < 0.0) {
            lambda = 0.0;
        }
        eigenvalues_[i] = lambda;
        eigenvectors_.col(i) = vecs.col(order[i]);
        sum += lambda;
    }
    for (double& lambda : eigenvalues_) {
        lambda /= sum;
    }
}

DensityMatrix DensityMatrix::pure(const VectorXcd& ket) {
    const double norm = ket.norm();
    if (norm < 1e-12) {
        throw invalid_state_error("cannot form a pure state from a zero vector");
    }
    const VectorXcd unit = ket / norm;
    return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim < 1) {
        throw domain_error("dimension must be positive");
    }
    return DensityMatrix(MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

int DensityMatrix::rank(double cutoff) const {
    int r = 0;
    for (double lambda : eigenvalues_) {
        if (lambda > cutoff) {
            ++r;
        }
    }
    return r;
}

}  // namespace qce
