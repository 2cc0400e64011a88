#include "qce/analytic_s2.hpp"

#include <algorithm>
#include <cmath>

#include "qce/optimize.hpp"

namespace qce {

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::X: return 'x';
        case Axis::Y: return 'y';
        case Axis::Z: return 'z';
    }
    return '?';
}

namespace {

void require_qubit_b(const BlochForm& bloch) {
    if (bloch.dim_b != 2) {
        throw domain_error("analytic S2 minimization needs a qubit on B");
    }
}

// Unit vector in the span of `basis` columns closest to `target`; falls back
// to x / y when the target is orthogonal to the span.
Eigen::Vector3d pick_in_subspace(const Eigen::MatrixXd& basis) {
    const Eigen::Vector3d candidates[] = {Eigen::Vector3d::UnitZ(), Eigen::Vector3d::UnitX(),
                                          Eigen::Vector3d::UnitY()};
    for (const Eigen::Vector3d& target : candidates) {
        Eigen::Vector3d projected = basis * (basis.transpose() * target);
        const double norm = projected.norm();
        if (norm > 1e-9) {
            return projected / norm;
        }
    }
    return basis.col(0).normalized();
}

}  // namespace

double quadratic_gain_direction(const BlochForm& bloch, const Eigen::Vector3d& k, double alpha) {
    require_qubit_b(bloch);
    const Eigen::Vector3d rb = bloch.r_b.head<3>();
    const double denom = k.squaredNorm() - std::pow(rb.dot(k), 2);
    if (denom <= 0.0) {
        return 0.0;
    }
    return alpha * (bloch.c * k).squaredNorm() / denom / bloch.dim_a;
}

S2MinResult s2_minimize_qudit_qubit(const BlochForm& bloch, double alpha, const Tolerances& tol) {
    require_qubit_b(bloch);
    const Eigen::Vector3d rb = bloch.r_b.head<3>();
    const Eigen::Matrix3d n_b = Eigen::Matrix3d::Identity() - rb * rb.transpose();
    const Eigen::Matrix3d ctc = bloch.c.transpose() * bloch.c;
    const double s2_a = 1.0 - (1.0 + bloch.r_a.squaredNorm()) / bloch.dim_a;

    S2MinResult result;
    result.alpha = alpha;

    // N_B eigenvalues are {1, 1, 1 - |rB|^2}; a singular metric means B is
    // pure and the state a product on which every gain vanishes.
    if (1.0 - rb.squaredNorm() <= tol.metric) {
        result.lambda_max = 0.0;
        result.k_defined = false;
        result.degenerate = true;
        result.s2_min = alpha * s2_a;
        result.i2_max = 0.0;
        return result;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> metric_solver(n_b);
    Eigen::Vector3d inv_sqrt;
    for (int i = 0; i < 3; ++i) {
        inv_sqrt(i) = 1.0 / std::sqrt(metric_solver.eigenvalues()(i));
    }
    const Eigen::Matrix3d n_inv_sqrt = metric_solver.eigenvectors() * inv_sqrt.asDiagonal() *
                                       metric_solver.eigenvectors().transpose();

    const Eigen::Matrix3d transformed = n_inv_sqrt * ctc * n_inv_sqrt;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
        0.5 * (transformed + transformed.transpose()));
    result.lambda_max = std::max(solver.eigenvalues()(2), 0.0);

    // Map eigenvectors of the transformed problem back to k space and collect
    // the (near-)degenerate top eigenspace.
    std::vector<Eigen::Vector3d> top;
    for (int i = 2; i >= 0; --i) {
        if (solver.eigenvalues()(2) - solver.eigenvalues()(i) <= tol.degenerate) {
            top.push_back((n_inv_sqrt * solver.eigenvectors().col(i)).normalized());
        }
    }
    result.degenerate = top.size() > 1;
    if (!result.degenerate) {
        result.k_star = top.front();
    } else {
        // The generalized eigenspace is a linear subspace of k vectors; pick
        // the direction maximizing |k_z| (then |k_x|) over it.
        Eigen::MatrixXd basis(3, top.size());
        for (std::size_t i = 0; i < top.size(); ++i) {
            basis.col(i) = top[i];
        }
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(3, top.size());
        result.k_star = pick_in_subspace(q);
    }
    if (result.k_star(2) < 0.0 ||
        (result.k_star(2) == 0.0 && (result.k_star(0) < 0.0 ||
                                     (result.k_star(0) == 0.0 && result.k_star(1) < 0.0)))) {
        result.k_star = -result.k_star;  // canonical hemisphere
    }

    result.i2_max = alpha * result.lambda_max / bloch.dim_a;
    result.s2_min = alpha * s2_a - result.i2_max;
    return result;
}

double i2_grid_maximize(const BlochForm& bloch, double alpha, int grid_theta, int grid_phi,
                        int refine_from) {
    require_qubit_b(bloch);
    auto value_at = [&](double theta, double phi) {
        const Eigen::Vector3d k(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                std::cos(theta));
        return quadratic_gain_direction(bloch, k, alpha);
    };

    std::vector<std::pair<double, Eigen::Vector2d>> cells;
    cells.reserve(static_cast<std::size_t>(grid_theta) * grid_phi);
    for (int i = 0; i < grid_theta; ++i) {
        const double theta = M_PI * (i + 0.5) / grid_theta;
        for (int j = 0; j < grid_phi; ++j) {
            const double phi = 2.0 * M_PI * j / grid_phi;
            cells.emplace_back(value_at(theta, phi), Eigen::Vector2d(theta, phi));
        }
    }
    std::partial_sort(cells.begin(), cells.begin() + refine_from, cells.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });

    double best = cells.front().first;
    NelderMeadOptions options;
    options.initial_step = M_PI / grid_theta;
    options.value_tolerance = 1e-13;
    options.simplex_tolerance = 1e-9;
    options.max_iterations = 400;
    for (int c = 0; c < refine_from; ++c) {
        const auto refined = nelder_mead(
            [&](const Eigen::VectorXd& x) { return -value_at(x(0), x(1)); },
            cells[c].second, options);
        best = std::max(best, -refined.value);
    }
    return best;
}

XStateI2 x_state_i2(const XStateParams& params, const Tolerances& tol) {
    XStateI2 result;
    const double lambda_x = params.j_x * params.j_x;
    const double lambda_y = params.j_y * params.j_y;
    const double denom = 1.0 - params.r_b * params.r_b;
    if (denom <= tol.metric) {
        // Pure marginal on B: product state, every candidate vanishes.
        result.i2 = 0.0;
        result.axis = Axis::Z;
        result.degenerate = true;
        return result;
    }
    const double cz = params.j_z - params.r_a * params.r_b;
    const double lambda_z = cz * cz / denom;

    result.i2 = lambda_z;
    result.axis = Axis::Z;
    if (lambda_x > result.i2) {
        result.i2 = lambda_x;
        result.axis = Axis::X;
    }
    if (lambda_y > result.i2) {
        result.i2 = lambda_y;
        result.axis = Axis::Y;
    }
    // Degeneracy: another candidate within tolerance of the maximum.
    int close = 0;
    for (double candidate : {lambda_x, lambda_y, lambda_z}) {
        if (result.i2 - candidate <= tol.degenerate) {
            ++close;
        }
    }
    result.degenerate = close > 1;
    return result;
}

GeometricDiscordResult geometric_discord_full(const BlochForm& bloch, double alpha,
                                              const Tolerances& tol) {
    require_qubit_b(bloch);
    const Eigen::Vector3d rb = bloch.r_b.head<3>();
    const Eigen::Matrix3d m2 = rb * rb.transpose() + bloch.j.transpose() * bloch.j;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m2);

    GeometricDiscordResult result;
    result.lambda_max = solver.eigenvalues()(2);
    std::vector<Eigen::Vector3d> top;
    for (int i = 2; i >= 0; --i) {
        if (solver.eigenvalues()(2) - solver.eigenvalues()(i) <= tol.degenerate) {
            top.push_back(solver.eigenvectors().col(i));
        }
    }
    result.degenerate = top.size() > 1;
    if (!result.degenerate) {
        result.k_star = top.front();
    } else {
        Eigen::MatrixXd basis(3, top.size());
        for (std::size_t i = 0; i < top.size(); ++i) {
            basis.col(i) = top[i];
        }
        result.k_star = pick_in_subspace(basis);
    }
    const int d = bloch.dim_a * bloch.dim_b;
    result.value =
        alpha * (rb.squaredNorm() + bloch.j.squaredNorm() - result.lambda_max) / d;
    return result;
}

double geometric_discord(const BlochForm& bloch, double alpha) {
    return geometric_discord_full(bloch, alpha).value;
}

TransitionMap transition_map(const std::function<Axis(double)>& classify, double lo, double hi,
                             int samples, double param_tolerance) {
    if (samples < 2) {
        throw domain_error("transition map needs at least two samples");
    }
    TransitionMap map;
    map.samples.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * i / (samples - 1);
        map.samples.emplace_back(t, classify(t));
    }
    for (int i = 0; i + 1 < samples; ++i) {
        if (map.samples[i].second == map.samples[i + 1].second) {
            continue;
        }
        double left = map.samples[i].first;
        double right = map.samples[i + 1].first;
        const Axis left_axis = map.samples[i].second;
        while (right - left > param_tolerance) {
            const double mid = 0.5 * (left + right);
            if (classify(mid) == left_axis) {
                left = mid;
            } else {
                right = mid;
            }
        }
        map.transitions.push_back(0.5 * (left + right));
    }
    return map;
}

TransitionMap s2_transition_map(const std::function<XStateParams(double)>& family, double lo,
                                double hi, int samples, double param_tolerance) {
    return transition_map([&](double t) { return x_state_i2(family(t)).axis; }, lo, hi, samples,
                          param_tolerance);
}

}  // namespace qce
