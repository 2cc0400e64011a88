#include "qce/random_states.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace qce {

namespace {

MatrixXcd ginibre(Rng& rng, int rows, int cols) {
    MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            g(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    return g;
}

}  // namespace

DensityMatrix random_density(Rng& rng, int dim, int rank) {
    if (rank <= 0 || rank > dim) {
        rank = dim;
    }
    const MatrixXcd g = ginibre(rng, dim, rank);
    MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho));
}

VectorXcd random_pure_vector(Rng& rng, int dim) {
    VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Complex(rng.normal(), rng.normal());
    }
    return v / v.norm();
}

BipartiteState random_bipartite(Rng& rng, int dim_a, int dim_b, int rank) {
    return BipartiteState(dim_a, dim_b, random_density(rng, dim_a * dim_b, rank));
}

BipartiteState random_product(Rng& rng, int dim_a, int dim_b) {
    const DensityMatrix a = random_density(rng, dim_a);
    const DensityMatrix b = random_density(rng, dim_b);
    return BipartiteState(dim_a, dim_b,
                          DensityMatrix(Eigen::kroneckerProduct(a.matrix(), b.matrix())));
}

BipartiteState random_separable(Rng& rng, int dim_a, int dim_b, int terms) {
    MatrixXcd m = MatrixXcd::Zero(dim_a * dim_b, dim_a * dim_b);
    std::vector<double> weights = random_spectrum(rng, terms);
    for (int t = 0; t < terms; ++t) {
        const DensityMatrix a = random_density(rng, dim_a);
        const DensityMatrix b = random_density(rng, dim_b);
        m += weights[t] * Eigen::kroneckerProduct(a.matrix(), b.matrix());
    }
    return BipartiteState(dim_a, dim_b, DensityMatrix(std::move(m)));
}

BipartiteState random_classically_correlated(Rng& rng, int dim_a, int dim_b) {
    std::vector<double> weights = random_spectrum(rng, dim_b);
    std::vector<DensityMatrix> conditionals;
    conditionals.reserve(dim_b);
    for (int k = 0; k < dim_b; ++k) {
        conditionals.push_back(random_density(rng, dim_a));
    }
    return classically_correlated(weights, conditionals, dim_b);
}

XStateParams random_x_params(Rng& rng) {
    for (;;) {
        XStateParams p;
        p.r_a = rng.uniform(-1.0, 1.0);
        p.r_b = rng.uniform(-1.0, 1.0);
        p.j_x = rng.uniform(-1.0, 1.0);
        p.j_y = rng.uniform(-1.0, 1.0);
        p.j_z = rng.uniform(-1.0, 1.0);

        const double p_plus = (1.0 + (p.r_a + p.r_b) + p.j_z) / 4.0;
        const double p_minus = (1.0 - (p.r_a + p.r_b) + p.j_z) / 4.0;
        const double q_plus = (1.0 + (p.r_a - p.r_b) - p.j_z) / 4.0;
        const double q_minus = (1.0 - (p.r_a - p.r_b) - p.j_z) / 4.0;
        const double a_plus = (p.j_x + p.j_y) / 4.0;
        const double a_minus = (p.j_x - p.j_y) / 4.0;
        if (p_plus >= 0.0 && p_minus >= 0.0 && q_plus >= 0.0 && q_minus >= 0.0 &&
            p_plus * p_minus >= a_minus * a_minus && q_plus * q_minus >= a_plus * a_plus) {
            return p;
        }
    }
}

std::vector<double> random_spectrum(Rng& rng, int dim) {
    std::vector<double> p(dim);
    double sum = 0.0;
    for (double& v : p) {
        v = -std::log(std::max(rng.uniform(), 1e-300));
        sum += v;
    }
    for (double& v : p) {
        v /= sum;
    }
    return p;
}

Eigen::MatrixXcd random_unitary(Rng& rng, int dim) {
    const MatrixXcd g = ginibre(rng, dim, dim);
    Eigen::HouseholderQR<MatrixXcd> qr(g);
    MatrixXcd q = qr.householderQ();
    const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {  // fix phases so the distribution is Haar
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

Eigen::MatrixXcd random_isometry(Rng& rng, int rows, int cols) {
    return random_unitary(rng, rows).leftCols(cols);
}

Eigen::Vector3d random_direction(Rng& rng) {
    Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
    while (v.norm() < 1e-6) {
        v = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
    }
    return v.normalized();
}

Rank1Povm random_rank1_povm(Rng& rng, int dim_b, int outcomes) {
    if (outcomes < dim_b) {
        throw domain_error("POVM needs at least dB outcomes to be complete");
    }
    for (;;) {
        const MatrixXcd u = random_isometry(rng, outcomes, dim_b);
        std::vector<PovmElement> elements;
        bool ok = true;
        for (int j = 0; j < outcomes; ++j) {
            // sqrt(r_j)|j_B> = sum_k conj(U_jk) |k>
            VectorXcd v = u.row(j).conjugate().transpose();
            const double weight = v.squaredNorm();
            if (weight < 1e-6) {  // keep every outcome well-conditioned
                ok = false;
                break;
            }
            elements.push_back(PovmElement{weight, v / v.norm()});
        }
        if (ok) {
            return Rank1Povm(std::move(elements));
        }
    }
}

BipartiteState perturbed_maximally_mixed(Rng& rng, double epsilon) {
    MatrixXcd x = ginibre(rng, 4, 4);
    x = 0.5 * (x + x.adjoint().eval());
    x -= (x.trace() / 4.0) * MatrixXcd::Identity(4, 4);
    x /= x.norm();
    const MatrixXcd m = MatrixXcd::Identity(4, 4) / 4.0 + epsilon * x;
    return BipartiteState(2, 2, DensityMatrix(m));
}

}  // namespace qce
