#pragma once

#include <utility>
#include <vector>

#include "qce/bloch.hpp"
#include "qce/entropy.hpp"
#include "qce/measurement.hpp"

namespace qce {

/// S_f(A|B_{Pi}) together with the ensuing information gain
/// I_f = S_f(A) - S_f(A|B_{Pi}) and the per-outcome breakdown.
struct ConditionalResult {
    double value = 0.0;
    double gain = 0.0;
    std::vector<std::pair<double, double>> per_outcome;  // (p_j, S_f of outcome)
};

// sum_j p_j S_f(rho_{A/Pi_j}); outcomes below tol.prob contribute zero.
ConditionalResult conditional_entropy(const BipartiteState& state, const Rank1Povm& povm,
                                      const EntropicFunction& f,
                                      const Tolerances& tol = default_tolerances());

// Same average over explicit positive operators on B (coarse-grained POVMs).
ConditionalResult conditional_entropy(const BipartiteState& state,
                                      const std::vector<MatrixXcd>& elements,
                                      const EntropicFunction& f,
                                      const Tolerances& tol = default_tolerances());

/// Closed form for the linear entropy,
///   S_2(A) - (alpha/d) sum_j r_j |C k_j|^2 / (1 + rB . k_j),
/// in the f(p) = alpha p(1-p) convention (alpha = 1 matches 1 - Tr rho^2).
double conditional_s2_closed_form(const BlochForm& bloch, const Rank1Povm& povm,
                                  double alpha = 1.0);

// The subtracted term above: the quadratic information gain I_2(A|B_{Pi}).
double quadratic_gain_closed_form(const BlochForm& bloch, const Rank1Povm& povm,
                                  double alpha = 1.0);

// R_2 = sum_j p_j Tr rho_{A/Pi_j}^2 / Tr rho_A^2, in [1, dA].
double purity_gain_ratio(const BipartiteState& state, const Rank1Povm& povm,
                         const Tolerances& tol = default_tolerances());

// Four-term closed form for a projective qubit measurement on a two-qubit
// state: sum over outcomes of p_nu f((1 pm |u_nu|)/2) with u_nu the
// conditional Bloch vector.
double two_qubit_conditional_f(const BlochForm& bloch, const QubitDirection& direction,
                               const EntropicFunction& f,
                               const Tolerances& tol = default_tolerances());

/// Minimum conditional entropy of w |Psi><Psi| + (1-w) I/d over all local
/// measurements (attained in the Schmidt basis of B):
///   sum_k q_k^w [ f((w q_k + (1-w)/d)/q_k^w) + (dA-1) f((1-w)/(d q_k^w)) ],
/// q_k^w = w q_k + (1-w)/dB, the Schmidt vector zero-padded to dB outcomes.
double pure_plus_mixed_minimum(double w, const std::vector<double>& schmidt, int dim_a,
                               int dim_b, const EntropicFunction& f);

}  // namespace qce
