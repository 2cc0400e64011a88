#include "qce/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qce/optimize.hpp"
#include "qce/rng.hpp"

namespace qce {

namespace {

// Average conditional entropy for the measurement defined by the rows of a
// (outcomes x dB) isometry: sqrt(r_j)|j_B> = conj(U row j). Works directly on
// the unnormalized kets so that vanishing-weight outcomes cost nothing.
double povm_objective(const BipartiteState& state, const EntropicFunction& f,
                      const Eigen::MatrixXcd& isometry, const Tolerances& tol) {
    const int da = state.dim_a();
    const int db = state.dim_b();
    const MatrixXcd& rho = state.matrix();
    double total = 0.0;
    MatrixXcd reduced(da, da);
    for (Eigen::Index j = 0; j < isometry.rows(); ++j) {
        const VectorXcd v = isometry.row(j).conjugate().transpose();
        reduced.setZero();
        for (int a = 0; a < da; ++a) {
            for (int a2 = 0; a2 < da; ++a2) {
                Complex sum = 0.0;
                for (int b = 0; b < db; ++b) {
                    for (int b2 = 0; b2 < db; ++b2) {
                        sum += std::conj(v(b)) * rho(a * db + b, a2 * db + b2) * v(b2);
                    }
                }
                reduced(a, a2) = sum;
            }
        }
        const double p = reduced.trace().real();
        if (p <= tol.prob) {
            continue;
        }
        reduced /= p;
        reduced = 0.5 * (reduced + reduced.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(reduced, Eigen::EigenvaluesOnly);
        double term = 0.0;
        for (int i = 0; i < da; ++i) {
            term += f(std::clamp(solver.eigenvalues()(i), 0.0, 1.0));
        }
        total += p * term;
    }
    return total;
}

Rank1Povm povm_from_isometry(const Eigen::MatrixXcd& isometry, double weight_cutoff = 1e-12) {
    std::vector<PovmElement> elements;
    for (Eigen::Index j = 0; j < isometry.rows(); ++j) {
        VectorXcd v = isometry.row(j).conjugate().transpose();
        const double weight = v.squaredNorm();
        if (weight <= weight_cutoff) {
            continue;
        }
        elements.push_back(PovmElement{weight, v / v.norm()});
    }
    return Rank1Povm(std::move(elements));
}

MinimizationOutcome minimize_projective(const BipartiteState& state, const EntropicFunction& f,
                                        const MinimizeOptions& options) {
    if (state.dim_b() != 2) {
        throw domain_error("projective minimization is parameterized for a qubit B");
    }
    const BlochForm bloch = to_bloch(state);
    const bool two_qubits = state.dim_a() == 2;

    auto value_at = [&](double theta, double phi) {
        const QubitDirection dir = QubitDirection::from_angles(theta, phi);
        if (two_qubits) {
            return two_qubit_conditional_f(bloch, dir, f);
        }
        return conditional_entropy(state, projective_from_direction(dir), f).value;
    };

    // Coarse sphere scan.
    std::vector<std::pair<double, Eigen::Vector2d>> cells;
    cells.reserve(static_cast<std::size_t>(options.grid_theta) * options.grid_phi);
    for (int i = 0; i < options.grid_theta; ++i) {
        const double theta = M_PI * (i + 0.5) / options.grid_theta;
        for (int j = 0; j < options.grid_phi; ++j) {
            const double phi = 2.0 * M_PI * j / options.grid_phi;
            cells.emplace_back(value_at(theta, phi), Eigen::Vector2d(theta, phi));
        }
    }
    const int refine = std::min<int>(options.refine_top, static_cast<int>(cells.size()));
    std::partial_sort(cells.begin(), cells.begin() + refine, cells.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

    MinimizationOutcome outcome;
    outcome.best_value = cells.front().first;
    Eigen::Vector2d best_angles = cells.front().second;
    outcome.converged = true;

    NelderMeadOptions nm;
    nm.initial_step = M_PI / options.grid_theta;
    nm.value_tolerance = options.value_tolerance * 1e-3;
    nm.simplex_tolerance = 1e-8;
    nm.max_iterations = options.max_iterations;
    auto objective = [&](const Eigen::VectorXd& x) { return value_at(x(0), x(1)); };
    for (int c = 0; c < refine; ++c) {
        const NelderMeadResult local = nelder_mead(objective, cells[c].second, nm);
        outcome.trace.emplace_back(c, local.value);
        if (local.value < outcome.best_value) {
            outcome.best_value = local.value;
            best_angles = local.x;
        }
        outcome.converged = outcome.converged && local.converged;
    }
    // Polish the winner with a tight simplex to pin the direction.
    NelderMeadOptions polish = nm;
    polish.initial_step = 2e-5;
    polish.simplex_tolerance = 1e-10;
    const NelderMeadResult last = nelder_mead(objective, best_angles, polish);
    if (last.value < outcome.best_value) {
        outcome.best_value = last.value;
        best_angles = last.x;
    }

    const QubitDirection direction = QubitDirection::from_angles(best_angles(0), best_angles(1));
    outcome.best_direction = direction.k;
    outcome.best_measurement = projective_from_direction(direction);
    return outcome;
}

MinimizationOutcome minimize_povm(const BipartiteState& state, const EntropicFunction& f,
                                  const MinimizeOptions& options) {
    const int db = state.dim_b();
    const int m = std::max(options.povm_outcomes, db);
    const int param_count = isometry_parameter_count(m);
    const Tolerances& tol = default_tolerances();

    auto objective = [&](const Eigen::VectorXd& params) {
        return povm_objective(state, f, isometry_from_parameters(params, m, db), tol);
    };

    Rng rng(options.seed);
    MinimizationOutcome outcome;
    outcome.best_value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_params;

    NelderMeadOptions nm;
    nm.initial_step = 0.4;
    nm.value_tolerance = options.value_tolerance * 1e-2;
    nm.simplex_tolerance = 1e-8;
    nm.max_iterations = options.max_iterations;

    for (int restart = 0; restart < options.restarts; ++restart) {
        Eigen::VectorXd start(param_count);
        if (restart == 0 && db == 2) {
            // Warm start: embed the best projective measurement.
            MinimizeOptions proj = options;
            proj.mode = MinimizeOptions::Mode::Projective;
            const MinimizationOutcome projective = minimize_projective(state, f, proj);
            Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(m, db);
            for (int j = 0; j < 2; ++j) {
                const PovmElement& e = (*projective.best_measurement)[j];
                u.row(j) = std::sqrt(e.weight) * e.ket.conjugate().transpose();
            }
            start = parameters_from_isometry(u);
        } else {
            for (int i = 0; i < param_count; ++i) {
                start(i) = rng.normal();
            }
        }
        const NelderMeadResult local = nelder_mead(objective, start, nm);
        outcome.trace.emplace_back(restart, local.value);
        if (local.value < outcome.best_value) {
            outcome.best_value = local.value;
            best_params = local.x;
        }
    }

    // Polish rounds with shrinking simplex around the best point.
    for (double step : {0.05, 0.005, 5e-4}) {
        NelderMeadOptions polish = nm;
        polish.initial_step = step;
        polish.simplex_tolerance = 1e-10;
        const NelderMeadResult refined = nelder_mead(objective, best_params, polish);
        if (refined.value < outcome.best_value) {
            outcome.best_value = refined.value;
            best_params = refined.x;
        }
        outcome.converged = refined.converged;
    }

    outcome.best_measurement = povm_from_isometry(isometry_from_parameters(best_params, m, db));
    return outcome;
}

}  // namespace

MinimizationOutcome minimize_conditional_entropy(const BipartiteState& state,
                                                 const EntropicFunction& f,
                                                 const MinimizeOptions& options) {
    if (options.mode == MinimizeOptions::Mode::Projective) {
        return minimize_projective(state, f, options);
    }
    return minimize_povm(state, f, options);
}

double quantum_discord(const BipartiteState& state, double log_base,
                       const MinimizeOptions& options) {
    const EntropicFunction f = EntropicFunction::von_neumann(log_base);
    MinimizeOptions opts = options;
    if (state.dim_b() != 2) {
        opts.mode = MinimizeOptions::Mode::Povm;
        opts.povm_outcomes = std::max(opts.povm_outcomes, state.dim_b());
    }
    const double min_conditional = minimize_conditional_entropy(state, f, opts).best_value;
    const double s_ab = entropy(state.rho(), f);
    const double s_b = entropy(partial_trace(state, Subsystem::B), f);
    return min_conditional - (s_ab - s_b);
}

double concurrence(const BipartiteState& state) {
    if (state.dim_a() != 2 || state.dim_b() != 2) {
        throw domain_error("concurrence is defined here for two qubits");
    }
    MatrixXcd flip = MatrixXcd::Zero(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const MatrixXcd& rho = state.matrix();
    const MatrixXcd product = rho * flip * rho.conjugate() * flip;

    Eigen::ComplexEigenSolver<MatrixXcd> solver(product);
    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        roots[i] = std::sqrt(std::max(solver.eigenvalues()(i).real(), 0.0));
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double negativity(const BipartiteState& state) {
    const MatrixXcd pt = partial_transpose_b(state.matrix(), state.dim_a(), state.dim_b());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
    double trace_norm = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        trace_norm += std::abs(solver.eigenvalues()(i));
    }
    return trace_norm - 1.0;
}

namespace {

struct EofBasis {
    std::vector<double> weights;  // q_k, descending
    MatrixXcd vectors;            // columns |k~_AC>
};

EofBasis eigen_ensemble(const BipartiteState& rho_ac) {
    EofBasis basis;
    const DensityMatrix& rho = rho_ac.rho();
    const int rank = rho.rank();
    basis.weights.assign(rho.eigenvalues().begin(), rho.eigenvalues().begin() + rank);
    basis.vectors = rho.eigenvectors().leftCols(rank);
    return basis;
}

// Members sqrt(p_j)|j> = sum_k U_jk sqrt(q_k) |k~>.
double eof_objective(const EofBasis& basis, const BipartiteState& rho_ac,
                     const EntropicFunction& f, const Eigen::MatrixXcd& u) {
    const int da = rho_ac.dim_a();
    const int dc = rho_ac.dim_b();
    const int n = static_cast<int>(basis.weights.size());
    double total = 0.0;
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
        VectorXcd member = VectorXcd::Zero(da * dc);
        for (int k = 0; k < n; ++k) {
            member += u(j, k) * std::sqrt(basis.weights[k]) * basis.vectors.col(k);
        }
        const double p = member.squaredNorm();
        if (p <= default_tolerances().prob) {
            continue;
        }
        member /= std::sqrt(p);
        // S_f of the A marginal of the pure member.
        MatrixXcd reduced = pure_marginal(member, {da, dc}, {0});
        Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(reduced, Eigen::EigenvaluesOnly);
        double term = 0.0;
        for (int i = 0; i < da; ++i) {
            term += f(std::clamp(solver.eigenvalues()(i), 0.0, 1.0));
        }
        total += p * term;
    }
    return total;
}

}  // namespace

EofResult eof_bruteforce(const BipartiteState& rho_ac, const EntropicFunction& f, int outcomes,
                         const MinimizeOptions& options) {
    const EofBasis basis = eigen_ensemble(rho_ac);
    const int n = static_cast<int>(basis.weights.size());
    if (outcomes < n) {
        throw domain_error("decomposition size must be at least the rank");
    }
    const int param_count = isometry_parameter_count(outcomes);

    auto objective = [&](const Eigen::VectorXd& params) {
        return eof_objective(basis, rho_ac, f, isometry_from_parameters(params, outcomes, n));
    };

    Rng rng(options.seed);
    EofResult result;
    result.value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_params;

    NelderMeadOptions nm;
    nm.initial_step = 0.4;
    nm.value_tolerance = options.value_tolerance * 1e-2;
    nm.simplex_tolerance = 1e-8;
    nm.max_iterations = options.max_iterations;
    for (int restart = 0; restart < options.restarts; ++restart) {
        Eigen::VectorXd start(param_count);
        if (restart == 0) {
            start.setZero();  // the eigen-ensemble itself
        } else {
            for (int i = 0; i < param_count; ++i) {
                start(i) = rng.normal();
            }
        }
        const NelderMeadResult local = nelder_mead(objective, start, nm);
        result.trace.emplace_back(restart, local.value);
        if (local.value < result.value) {
            result.value = local.value;
            best_params = local.x;
        }
    }
    for (double step : {0.05, 0.005, 5e-4}) {
        NelderMeadOptions polish = nm;
        polish.initial_step = step;
        polish.simplex_tolerance = 1e-10;
        const NelderMeadResult refined = nelder_mead(objective, best_params, polish);
        if (refined.value < result.value) {
            result.value = refined.value;
            best_params = refined.x;
        }
        result.converged = refined.converged;
    }

    const Eigen::MatrixXcd u = isometry_from_parameters(best_params, outcomes, n);
    result.ensemble.source = u;
    for (int j = 0; j < outcomes; ++j) {
        VectorXcd member = VectorXcd::Zero(rho_ac.dim());
        for (int k = 0; k < n; ++k) {
            member += u(j, k) * std::sqrt(basis.weights[k]) * basis.vectors.col(k);
        }
        const double p = member.squaredNorm();
        if (p > default_tolerances().prob) {
            result.ensemble.members.emplace_back(p, member / std::sqrt(p));
        }
    }
    return result;
}

BipartiteState purified_ac_state(const Purification& purification, int dim_a, int dim_b) {
    if (purification.dim_ab != dim_a * dim_b) {
        throw domain_error("purification does not match the stated factor dimensions");
    }
    MatrixXcd rho_ac =
        pure_marginal(purification.psi, {dim_a, dim_b, purification.dim_c}, {0, 2});
    return BipartiteState(dim_a, purification.dim_c, DensityMatrix(std::move(rho_ac)));
}

Rank1Povm decomposition_to_measurement(const DecompositionEnsemble& ensemble,
                                       const Purification& purification, int dim_a, int dim_b) {
    const int dc = purification.dim_c;
    const std::vector<int> dims = {dim_a, dim_b, dc};

    // (AC, B) Schmidt data of the purification: eigenbasis of rho_B.
    const MatrixXcd rho_b = pure_marginal(purification.psi, dims, {1});
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(rho_b);
    std::vector<int> order;
    for (int i = static_cast<int>(rho_b.rows()) - 1; i >= 0; --i) {
        if (solver.eigenvalues()(i) > 1e-12) {
            order.push_back(i);
        }
    }
    const int n = static_cast<int>(order.size());

    // Schmidt partners |k~_AC> = <k~_B|Psi> / sqrt(q_k).
    MatrixXcd partners(dim_a * dc, n);
    MatrixXcd b_basis(dim_b, n);
    for (int k = 0; k < n; ++k) {
        const VectorXcd kb = fix_phase(solver.eigenvectors().col(order[k]));
        b_basis.col(k) = kb;
        const double q = solver.eigenvalues()(order[k]);
        VectorXcd partner = VectorXcd::Zero(dim_a * dc);
        for (int a = 0; a < dim_a; ++a) {
            for (int c = 0; c < dc; ++c) {
                Complex sum = 0.0;
                for (int b = 0; b < dim_b; ++b) {
                    sum += std::conj(kb(b)) * purification.psi((a * dim_b + b) * dc + c);
                }
                partner(a * dc + c) = sum;
            }
        }
        partners.col(k) = partner / std::sqrt(q);
    }

    // sqrt(p_j)|j_AC> = sum_k U_jk sqrt(q_k) |k~_AC>, so
    // U_jk = sqrt(p_j / q_k) <k~_AC|j_AC>; columns must come out orthonormal.
    const int m = static_cast<int>(ensemble.members.size());
    if (m < n) {
        throw domain_error("ensemble has fewer members than the purification rank");
    }
    Eigen::MatrixXcd u(m, n);
    for (int j = 0; j < m; ++j) {
        const auto& [p, member] = ensemble.members[j];
        if (member.size() != dim_a * dc) {
            throw domain_error("ensemble member dimension does not match A x C");
        }
        for (int k = 0; k < n; ++k) {
            const double q = solver.eigenvalues()(order[k]);
            u(j, k) = std::sqrt(p / q) * partners.col(k).dot(member);
        }
        // Consistency: the member must lie in the Schmidt span.
        VectorXcd residual = std::sqrt(p) * member;
        for (int k = 0; k < n; ++k) {
            const double q = solver.eigenvalues()(order[k]);
            residual -= u(j, k) * std::sqrt(q) * partners.col(k);
        }
        if (residual.norm() > 1e-8) {
            throw domain_error("ensemble member leaves the purification support");
        }
    }
    const double defect =
        ((u.adjoint() * u) - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (defect > 1e-7) {
        throw domain_error("ensemble is not a decomposition of the purified AC state");
    }

    // sqrt(r_j)|j_B> = sum_k conj(U_jk) |k~_B>.
    std::vector<PovmElement> elements;
    for (int j = 0; j < m; ++j) {
        VectorXcd v = VectorXcd::Zero(dim_b);
        for (int k = 0; k < n; ++k) {
            v += std::conj(u(j, k)) * b_basis.col(k);
        }
        const double weight = v.squaredNorm();
        if (weight > 1e-12) {
            elements.push_back(PovmElement{weight, v / v.norm()});
        }
    }
    // Complete on the orthogonal complement of the B support (never fires).
    if (n < dim_b) {
        MatrixXcd support = MatrixXcd::Zero(dim_b, dim_b);
        for (int k = 0; k < n; ++k) {
            support += b_basis.col(k) * b_basis.col(k).adjoint();
        }
        Eigen::SelfAdjointEigenSolver<MatrixXcd> comp(support);
        for (int i = 0; i < dim_b; ++i) {
            if (comp.eigenvalues()(i) < 0.5) {
                elements.push_back(PovmElement{1.0, fix_phase(comp.eigenvectors().col(i))});
            }
        }
    }
    return Rank1Povm(std::move(elements));
}

}  // namespace qce
