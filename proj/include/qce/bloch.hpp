#pragma once

#include <Eigen/Dense>

#include "qce/bipartite.hpp"
#include "qce/generators.hpp"

namespace qce {

/// Generator-basis representation of a bipartite state:
///   rho = [I + rA.sigma_A (x) I + I (x) rB.sigma_B + sigma_A^t J sigma_B] / d
/// together with the correlation matrix C = J - rA rB^t.
struct BlochForm {
    int dim_a = 0;
    int dim_b = 0;
    Eigen::VectorXd r_a;  // length dA^2 - 1
    Eigen::VectorXd r_b;  // length dB^2 - 1
    Eigen::MatrixXd j;    // (dA^2-1) x (dB^2-1), J_ij = <sigma_Ai (x) sigma_Bj>
    Eigen::MatrixXd c;    // J - rA rB^t

    double correlation_norm2() const { return c.squaredNorm(); }
};

BlochForm to_bloch(const BipartiteState& state);
BipartiteState from_bloch(const BlochForm& bloch);

// Single-system form rho = (I + r.sigma)/d.
Eigen::VectorXd bloch_vector(const DensityMatrix& rho);

}  // namespace qce
