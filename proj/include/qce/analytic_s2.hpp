#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qce/bloch.hpp"
#include "qce/families.hpp"
#include "qce/measurement.hpp"

namespace qce {

enum class Axis { X, Y, Z };

char axis_name(Axis axis);

/// Outcome of the closed-form S_2 minimization over projective measurements
/// on a qubit B: lambda_max is the largest root of det[C^t C - lambda N_B] = 0
/// with N_B = I - rB rB^t, and k_star the associated direction.
struct S2MinResult {
    double lambda_max = 0.0;
    Eigen::Vector3d k_star = Eigen::Vector3d::UnitZ();
    bool k_defined = true;    // false on the product-state shortcut
    bool degenerate = false;  // top generalized eigenvalue within tolerance of the next
    double s2_min = 0.0;      // alpha * [S_2(A) - lambda_max / dA]
    double i2_max = 0.0;      // alpha * lambda_max / dA
    double alpha = 1.0;       // linear-entropy scale the values are reported in
};

S2MinResult s2_minimize_qudit_qubit(const BlochForm& bloch, double alpha = 1.0,
                                    const Tolerances& tol = default_tolerances());

// I_2(A|B_k) = (alpha/dA) |C k|^2 / (k^t N_B k) for a single direction.
double quadratic_gain_direction(const BlochForm& bloch, const Eigen::Vector3d& k,
                                double alpha = 1.0);

// Independent route to the same maximum: dense (theta, phi) grid over the
// sphere followed by local refinement of the best cells.
double i2_grid_maximize(const BlochForm& bloch, double alpha = 1.0, int grid_theta = 120,
                        int grid_phi = 240, int refine_from = 5);

/// Maximum quadratic gain of an X state in the rescaled two-qubit convention
/// (alpha = 2): Max[Jx^2, Jy^2, (Jz - rA rB)^2/(1 - rB^2)], arg-max ties
/// resolved in the order z, x, y.
struct XStateI2 {
    double i2 = 0.0;
    Axis axis = Axis::Z;
    bool degenerate = false;
};

XStateI2 x_state_i2(const XStateParams& params, const Tolerances& tol = default_tolerances());

/// Geometric discord (alpha/d)(|rB|^2 + ||J||^2 - lambda~_max) with
/// lambda~_max the top eigenvalue of M2 = rB rB^t + J^t J; the minimizing
/// projective measurement is along the associated eigenvector.
struct GeometricDiscordResult {
    double value = 0.0;
    double lambda_max = 0.0;
    Eigen::Vector3d k_star = Eigen::Vector3d::UnitZ();
    bool degenerate = false;
};

GeometricDiscordResult geometric_discord_full(const BlochForm& bloch, double alpha = 1.0,
                                              const Tolerances& tol = default_tolerances());
double geometric_discord(const BlochForm& bloch, double alpha = 1.0);

/// Arg-max axis along a one-parameter family of X states, with transition
/// points located by bisection.
struct TransitionMap {
    std::vector<std::pair<double, Axis>> samples;
    std::vector<double> transitions;
};

TransitionMap transition_map(const std::function<Axis(double)>& classify, double lo, double hi,
                             int samples, double param_tolerance = 1e-6);

TransitionMap s2_transition_map(const std::function<XStateParams(double)>& family, double lo,
                                double hi, int samples, double param_tolerance = 1e-6);

}  // namespace qce
