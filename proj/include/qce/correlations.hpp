#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qce/analytic_s2.hpp"
#include "qce/conditional.hpp"

namespace qce {

struct MinimizeOptions {
    enum class Mode { Projective, Povm };
    Mode mode = Mode::Projective;
    int povm_outcomes = 2;

    // Projective mode: coarse sphere grid, then simplex refinement of the
    // best cells.
    int grid_theta = 60;
    int grid_phi = 120;
    int refine_top = 5;

    // POVM / decomposition mode: random restarts over isometry parameters.
    int restarts = 20;
    int max_iterations = 2000;
    double value_tolerance = 1e-9;
    std::uint64_t seed = 20240901;
};

/// Result of minimizing S_f(A|B_M) over local measurements on B.
struct MinimizationOutcome {
    double best_value = 0.0;
    std::optional<Rank1Povm> best_measurement;
    std::optional<Eigen::Vector3d> best_direction;  // projective qubit mode only
    std::vector<std::pair<int, double>> trace;      // (restart index, converged value)
    bool converged = false;
};

MinimizationOutcome minimize_conditional_entropy(const BipartiteState& state,
                                                 const EntropicFunction& f,
                                                 const MinimizeOptions& options = {});

// D(A|B) = min_M S(A|B_M) - [S(A,B) - S(B)], von Neumann entropy.
double quantum_discord(const BipartiteState& state, double log_base = 2.0,
                       const MinimizeOptions& options = {});

// Wootters concurrence of a two-qubit state.
double concurrence(const BipartiteState& state);

// Tr |rho^{T_B}| - 1 >= 0.
double negativity(const BipartiteState& state);

/// Convex decomposition of a mixed state into pure members, recorded together
/// with the isometry that produced it from the eigen-ensemble.
struct DecompositionEnsemble {
    std::vector<std::pair<double, VectorXcd>> members;  // (p_j, |j>)
    Eigen::MatrixXcd source;                            // m x n, orthonormal columns
};

struct EofResult {
    double value = 0.0;
    DecompositionEnsemble ensemble;
    std::vector<std::pair<int, double>> trace;
    bool converged = false;
};

/// Convex-roof E_f(A, C) of a bipartite state by random-restart minimization
/// of sum_j p_j S_f(rho_A^j) over `outcomes`-member decompositions.
EofResult eof_bruteforce(const BipartiteState& rho_ac, const EntropicFunction& f, int outcomes,
                         const MinimizeOptions& options = {});

/// POVM on B whose conditional pure states on AC reproduce the given
/// decomposition of rho_AC = Tr_B |Psi_ABC><Psi_ABC|. The purification must
/// be of the (A x B) state that the ensemble's AC members refer to.
Rank1Povm decomposition_to_measurement(const DecompositionEnsemble& ensemble,
                                       const Purification& purification, int dim_a, int dim_b);

// Tr_B of the purification, as a bipartite state on A x C.
BipartiteState purified_ac_state(const Purification& purification, int dim_a, int dim_b);

}  // namespace qce
