#include "qce/families.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qce {

BipartiteState x_state(const XStateParams& p) {
    const double p_plus = (1.0 + (p.r_a + p.r_b) + p.j_z) / 4.0;
    const double p_minus = (1.0 - (p.r_a + p.r_b) + p.j_z) / 4.0;
    const double q_plus = (1.0 + (p.r_a - p.r_b) - p.j_z) / 4.0;
    const double q_minus = (1.0 - (p.r_a - p.r_b) - p.j_z) / 4.0;
    const double a_plus = (p.j_x + p.j_y) / 4.0;
    const double a_minus = (p.j_x - p.j_y) / 4.0;

    const double slack = 1e-12;
    auto check = [&](bool ok, const std::string& inequality) {
        if (!ok) {
            throw invalid_parameters_error("X state violates " + inequality);
        }
    };
    check(p_plus >= -slack, "p+ >= 0");
    check(p_minus >= -slack, "p- >= 0");
    check(q_plus >= -slack, "q+ >= 0");
    check(q_minus >= -slack, "q- >= 0");
    check(p_plus * p_minus + slack >= a_minus * a_minus, "p+ p- >= alpha-^2");
    check(q_plus * q_minus + slack >= a_plus * a_plus, "q+ q- >= alpha+^2");

    MatrixXcd m = MatrixXcd::Zero(4, 4);
    m(0, 0) = p_plus;
    m(1, 1) = q_plus;
    m(2, 2) = q_minus;
    m(3, 3) = p_minus;
    m(0, 3) = m(3, 0) = a_minus;
    m(1, 2) = m(2, 1) = a_plus;
    return BipartiteState(2, 2, DensityMatrix(std::move(m)));
}

BipartiteState pure_plus_mixed(double w, const std::vector<double>& schmidt, int dim_a,
                               int dim_b) {
    if (w < 0.0 || w > 1.0) {
        throw domain_error("mixture weight w must lie in [0, 1], got " + std::to_string(w));
    }
    if (schmidt.size() > static_cast<std::size_t>(std::min(dim_a, dim_b))) {
        throw domain_error("Schmidt vector longer than min(dA, dB)");
    }
    double sum = 0.0;
    for (double q : schmidt) {
        if (q < -1e-12) {
            throw invalid_distribution_error("negative Schmidt coefficient");
        }
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw invalid_distribution_error("Schmidt coefficients sum to " + std::to_string(sum));
    }

    const int d = dim_a * dim_b;
    VectorXcd psi = VectorXcd::Zero(d);
    for (std::size_t k = 0; k < schmidt.size(); ++k) {
        psi(static_cast<int>(k) * dim_b + static_cast<int>(k)) =
            std::sqrt(std::max(schmidt[k], 0.0));
    }
    MatrixXcd m = w * (psi * psi.adjoint()) +
                  ((1.0 - w) / d) * MatrixXcd::Identity(d, d);
    return BipartiteState(dim_a, dim_b, DensityMatrix(std::move(m)));
}

BipartiteState aligned_mixture(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    VectorXcd up(2), down(2);
    up << c, s;     // |theta>
    down << c, -s;  // |-theta>

    const VectorXcd up_up = Eigen::kroneckerProduct(up, up);
    const VectorXcd down_down = Eigen::kroneckerProduct(down, down);
    MatrixXcd m = 0.5 * (up_up * up_up.adjoint() + down_down * down_down.adjoint());
    return BipartiteState(2, 2, DensityMatrix(std::move(m)));
}

BipartiteState classically_correlated(const std::vector<double>& weights,
                                      const std::vector<DensityMatrix>& states_a, int dim_b) {
    if (weights.size() != states_a.size()) {
        throw domain_error("weights and conditional states differ in length");
    }
    if (weights.empty() || weights.size() > static_cast<std::size_t>(dim_b)) {
        throw domain_error("need between 1 and dB pointer components");
    }
    double sum = 0.0;
    for (double q : weights) {
        if (q < -1e-12) {
            throw invalid_distribution_error("negative pointer weight");
        }
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw invalid_distribution_error("pointer weights sum to " + std::to_string(sum));
    }
    const int dim_a = states_a.front().dim();
    MatrixXcd m = MatrixXcd::Zero(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (states_a[k].dim() != dim_a) {
            throw domain_error("conditional states have mixed dimensions");
        }
        MatrixXcd pointer = MatrixXcd::Zero(dim_b, dim_b);
        pointer(static_cast<int>(k), static_cast<int>(k)) = 1.0;
        m += weights[k] * Eigen::kroneckerProduct(states_a[k].matrix(), pointer);
    }
    return BipartiteState(dim_a, dim_b, DensityMatrix(std::move(m)));
}

BipartiteState xy_strong_field_pair(const Eigen::MatrixXcd& alpha, int site_i, int site_j) {
    const int n = static_cast<int>(alpha.rows());
    if (alpha.cols() != n || site_i < 0 || site_j < 0 || site_i >= n || site_j >= n ||
        site_i == site_j) {
        throw domain_error("invalid pair amplitude matrix or site indices");
    }
    if ((alpha - alpha.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw domain_error("pair amplitudes must be symmetric");
    }
    if (!alpha.allFinite()) {
        throw domain_error("pair amplitudes must be finite");
    }

    const Complex a_ij = alpha(site_i, site_j);
    double q_i_flip = 0.0;   // weight of |1_i 0_j> configurations
    double q_j_flip = 0.0;   // weight of |0_i 1_j> configurations
    Complex cross = 0.0;     // <0_i 1_j| rho |1_i 0_j> before phase fixing
    for (int k = 0; k < n; ++k) {
        if (k == site_i || k == site_j) continue;
        q_i_flip += std::norm(alpha(site_i, k));
        q_j_flip += std::norm(alpha(site_j, k));
        cross += alpha(site_j, k) * std::conj(alpha(site_i, k));
    }
    // Weight left on |00>: the unexcited component plus all pair excitations
    // away from sites i, j.
    double rest = 1.0;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            if (k != site_i && k != site_j && l != site_i && l != site_j) {
                rest += std::norm(alpha(k, l));
            }
        }
    }
    const double norm = rest + std::norm(a_ij) + q_i_flip + q_j_flip;
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw domain_error("pair state cannot be normalized");
    }

    MatrixXcd m = MatrixXcd::Zero(4, 4);
    m(0, 0) = rest / norm;
    m(1, 1) = q_j_flip / norm;             // |01>: site j excited
    m(2, 2) = q_i_flip / norm;             // |10>: site i excited
    m(3, 3) = std::norm(a_ij) / norm;
    m(0, 3) = m(3, 0) = std::abs(a_ij) / norm;   // alpha_- made real by local phases
    m(1, 2) = m(2, 1) = std::abs(cross) / norm;  // alpha_+ likewise
    return BipartiteState(2, 2, DensityMatrix(std::move(m)));
}

BipartiteState xy_strong_field_pair(const Eigen::MatrixXd& alpha, int site_i, int site_j) {
    return xy_strong_field_pair(MatrixXcd(alpha.cast<Complex>()), site_i, site_j);
}

Eigen::MatrixXd xy_chain_amplitudes(int sites, double coupling_x, double coupling_y,
                                    double field) {
    if (sites < 2) {
        throw domain_error("chain needs at least two sites");
    }
    if (field == 0.0) {
        throw domain_error("transverse field must be nonzero");
    }
    Eigen::MatrixXd alpha = Eigen::MatrixXd::Zero(sites, sites);
    const double value = (coupling_x - coupling_y) / (2.0 * field);
    for (int k = 0; k + 1 < sites; ++k) {
        alpha(k, k + 1) = value;
        alpha(k + 1, k) = value;
    }
    return alpha;
}

BipartiteState bell_state() {
    VectorXcd psi(4);
    psi << 1.0, 0.0, 0.0, 1.0;
    return BipartiteState(2, 2, DensityMatrix::pure(psi));
}

}  // namespace qce
