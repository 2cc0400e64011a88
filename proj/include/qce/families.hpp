#pragma once

#include <vector>

#include "qce/bipartite.hpp"

namespace qce {

struct XStateParams {
    double r_a = 0.0;
    double r_b = 0.0;
    double j_x = 0.0;
    double j_y = 0.0;
    double j_z = 0.0;
};

/// Two-qubit state with support on the diagonal and anti-diagonal only:
///   diag = (p+, q+, q-, p-), corners alpha_-, center alpha_+, where
///   p_pm = (1 pm (rA+rB) + Jz)/4, q_pm = (1 pm (rA-rB) - Jz)/4,
///   alpha_pm = (Jx pm Jy)/4.
/// Throws invalid_parameters_error naming the violated positivity condition.
BipartiteState x_state(const XStateParams& p);

// w |Psi><Psi| + (1-w) I/d with |Psi> = sum_k sqrt(q_k) |k k> in the
// computational bases. schmidt must have length <= min(dA, dB).
BipartiteState pure_plus_mixed(double w, const std::vector<double>& schmidt, int dim_a,
                               int dim_b);

// (|tt><tt| + |-t-t><-t-t|)/2 with |t> = cos(t/2)|0> + sin(t/2)|1>.
BipartiteState aligned_mixture(double theta);

// sum_k q_k rho_k (x) |k><k| on A x B with the pointer basis computational.
BipartiteState classically_correlated(const std::vector<double>& weights,
                                      const std::vector<DensityMatrix>& states_a, int dim_b);

/// Reduced pair state (sites i, j) of the weak-coupling ground state
/// |0...0> + sum_{k<l} alpha_kl |kl> of an XY array in a strong transverse
/// field, normalized at finite alpha. Local phases are chosen so the two
/// anti-diagonal entries are real non-negative.
BipartiteState xy_strong_field_pair(const Eigen::MatrixXd& alpha, int site_i, int site_j);
BipartiteState xy_strong_field_pair(const Eigen::MatrixXcd& alpha, int site_i, int site_j);

// First-order pair amplitudes alpha_kl = (Jx_kl - Jy_kl) / (2B) for a
// nearest-neighbor chain of n sites in transverse field b.
Eigen::MatrixXd xy_chain_amplitudes(int sites, double coupling_x, double coupling_y, double field);

// Convenience Bell state (|00> + |11>)/sqrt(2).
BipartiteState bell_state();

}  // namespace qce
