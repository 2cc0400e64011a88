#include "qce/validate.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "qce/analytic_s2.hpp"
#include "qce/bloch.hpp"
#include "qce/conditional.hpp"
#include "qce/correlations.hpp"
#include "qce/entropy.hpp"
#include "qce/families.hpp"
#include "qce/io.hpp"
#include "qce/random_states.hpp"

namespace qce {

namespace {

struct Harness {
    SuiteResult result;
    double scale = 1.0;

    explicit Harness(std::string name, double tolerance_scale)
        : result{std::move(name), 0, 0, {}}, scale(tolerance_scale) {}

    void check(bool ok, const std::string& label) {
        ++result.checks;
        if (!ok) {
            ++result.failures;
            if (result.messages.size() < 8) {
                result.messages.push_back(label);
            }
        }
    }

    void check_near(double actual, double expected, double tolerance, const std::string& label) {
        const bool ok = std::abs(actual - expected) <= tolerance * scale;
        if (!ok) {
            std::ostringstream msg;
            msg << label << ": " << format_number(actual) << " vs " << format_number(expected);
            check(false, msg.str());
        } else {
            check(true, label);
        }
    }

    void check_le(double lhs, double rhs, double slack, const std::string& label) {
        const bool ok = lhs <= rhs + slack * scale;
        if (!ok) {
            std::ostringstream msg;
            msg << label << ": " << format_number(lhs) << " > " << format_number(rhs);
            check(false, msg.str());
        } else {
            check(true, label);
        }
    }
};

std::vector<EntropicFunction> registered_entropies() {
    return {EntropicFunction::von_neumann(2.0), EntropicFunction::von_neumann(M_E),
            EntropicFunction::linear(1.0),      EntropicFunction::linear(2.0),
            EntropicFunction::tsallis(1.5),     EntropicFunction::tsallis(3.0)};
}

}  // namespace

SuiteResult validate_entropy(const ValidateConfig& config) {
    Harness h("entropy-axioms", config.tolerance_scale);
    Rng rng(config.seed);
    const auto entropies = registered_entropies();

    for (int trial = 0; trial < config.samples; ++trial) {
        const int d = 2 + static_cast<int>(rng.integer(3));

        // p = t q + (1-t) uniform is majorized by q.
        const std::vector<double> q = random_spectrum(rng, d);
        const double t = rng.uniform();
        std::vector<double> p(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            p[i] = t * q[i] + (1.0 - t) / d;
        }
        const Spectrum sp(p), sq(q);
        h.check(majorizes(sp, sq), "mixed-toward-uniform spectrum is majorized");
        for (const auto& f : entropies) {
            h.check_le(entropy(sq, f), entropy(sp, f), 1e-11,
                       "majorization monotonicity for " + f.label());
        }

        // Concavity on a random two-component mixture.
        const DensityMatrix rho1 = random_density(rng, d);
        const DensityMatrix rho2 = random_density(rng, d);
        const double w = rng.uniform();
        const DensityMatrix mix(w * rho1.matrix() + (1.0 - w) * rho2.matrix());
        for (const auto& f : entropies) {
            h.check_le(w * entropy(rho1, f) + (1.0 - w) * entropy(rho2, f), entropy(mix, f),
                       1e-11, "entropy concavity for " + f.label());
        }

        // Maximum at I/d.
        const DensityMatrix mm = DensityMatrix::maximally_mixed(d);
        for (const auto& f : entropies) {
            h.check_le(entropy(rho1, f), entropy(mm, f), 1e-11,
                       "maximum at I/d for " + f.label());
        }

        // Rescaled quadratic and Tsallis bounds on a single qubit.
        const DensityMatrix qubit = random_density(rng, 2);
        const double vn2 = entropy(qubit, EntropicFunction::von_neumann(2.0));
        h.check_le(entropy(qubit, EntropicFunction::linear(2.0)), vn2, 1e-11,
                   "S2(rescaled) <= S on a qubit");
        for (double index : {1.5, 2.0, 3.0, 4.5}) {
            h.check_le(entropy(qubit, EntropicFunction::tsallis(index)), vn2, 1e-11,
                       "S_q <= S on a qubit, q=" + std::to_string(index));
        }
    }

    // Strict concavity of every registered f on sampled triples.
    for (int trial = 0; trial < config.samples; ++trial) {
        double a = rng.uniform(1e-3, 1.0 - 1e-3);
        double b = rng.uniform(1e-3, 1.0 - 1e-3);
        if (std::abs(a - b) < 1e-6) {
            continue;
        }
        const double t = rng.uniform(0.1, 0.9);
        for (const auto& f : entropies) {
            h.check(f(t * a + (1.0 - t) * b) >
                        t * f(a) + (1.0 - t) * f(b) - default_tolerances().concavity,
                    "strict concavity for " + f.label());
        }
    }

    // Endpoints are exact.
    for (const auto& f : entropies) {
        h.check(f(0.0) == 0.0 && f(1.0) == 0.0, "f(0) = f(1) = 0 for " + f.label());
    }

    // Purity and maximal mixedness for the classical conditional entropy.
    Eigen::MatrixXd independent(2, 2);
    independent << 0.35 * 0.5, 0.35 * 0.5, 0.65 * 0.5, 0.65 * 0.5;
    const double sa = EntropicFunction::von_neumann(2.0)(0.35) +
                      EntropicFunction::von_neumann(2.0)(0.65);
    h.check_near(
        classical_conditional_entropy(independent, EntropicFunction::von_neumann(2.0)), sa,
        1e-12, "independent joint gives S_f(A)");

    return h.result;
}

SuiteResult validate_states(const ValidateConfig& config) {
    Harness h("states-representation", config.tolerance_scale);
    Rng rng(config.seed + 1);

    for (int trial = 0; trial < config.samples; ++trial) {
        const int da = 2 + static_cast<int>(rng.integer(2));
        const int db = 2 + static_cast<int>(rng.integer(2));
        const BipartiteState state = random_bipartite(rng, da, db);
        const BlochForm bloch = to_bloch(state);

        // Round trips in both directions.
        const BipartiteState back = from_bloch(bloch);
        h.check((back.matrix() - state.matrix()).cwiseAbs().maxCoeff() < 1e-10,
                "from_bloch(to_bloch(rho)) = rho");
        const BlochForm again = to_bloch(back);
        h.check((again.j - bloch.j).cwiseAbs().maxCoeff() < 1e-10 &&
                    (again.r_a - bloch.r_a).norm() < 1e-10 &&
                    (again.r_b - bloch.r_b).norm() < 1e-10,
                "to_bloch(from_bloch(x)) = x");

        // C = J - rA rB^t and the distance identity ||rho - rhoA x rhoB||^2
        // = ||C||^2 / d.
        const MatrixXcd product = Eigen::kroneckerProduct(
            partial_trace(state, Subsystem::A).matrix(),
            partial_trace(state, Subsystem::B).matrix());
        h.check_near((state.matrix() - product).squaredNorm(),
                     bloch.correlation_norm2() / state.dim(), 1e-10,
                     "||rho - rhoA x rhoB||^2 = ||C||^2/d");

        // S2 from the Bloch length.
        const DensityMatrix rho_a = partial_trace(state, Subsystem::A);
        const Eigen::VectorXd r = bloch_vector(rho_a);
        h.check_near(entropy(rho_a, EntropicFunction::linear(1.0)),
                     1.0 - (1.0 + r.squaredNorm()) / da, 1e-10, "S2 = 1 - (1+|r|^2)/d");
    }

    // Pure states satisfy |r|^2 = d - 1.
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + static_cast<int>(rng.integer(3));
        const DensityMatrix pure = DensityMatrix::pure(random_pure_vector(rng, d));
        h.check_near(bloch_vector(pure).squaredNorm(), d - 1.0, 1e-9, "pure |r|^2 = d-1");
    }

    // X states commute with the z parity.
    MatrixXcd parity = MatrixXcd::Zero(4, 4);
    parity(0, 0) = parity(3, 3) = 1.0;
    parity(1, 1) = parity(2, 2) = -1.0;
    for (int trial = 0; trial < config.samples; ++trial) {
        const BipartiteState xs = x_state(random_x_params(rng));
        h.check((xs.matrix() * parity - parity * xs.matrix()).cwiseAbs().maxCoeff() == 0.0,
                "X state commutes with sigma_z x sigma_z");
    }

    // Aligned mixture has no z correlation and the stated Bloch data.
    for (int trial = 0; trial < 10; ++trial) {
        const double theta = rng.uniform(0.0, M_PI / 2.0);
        const BlochForm bloch = to_bloch(aligned_mixture(theta));
        const double c = std::cos(theta);
        h.check_near(bloch.r_a(2), c, 1e-12, "aligned rA_z = cos(theta)");
        h.check_near(bloch.j(2, 2), c * c, 1e-12, "aligned J_z = cos^2(theta)");
        h.check_near(bloch.j(0, 0), 1.0 - c * c, 1e-12, "aligned J_x = sin^2(theta)");
        h.check_near(bloch.c(2, 2), 0.0, 1e-12, "aligned C_zz = 0");
    }

    return h.result;
}

SuiteResult validate_measurement(const ValidateConfig& config) {
    Harness h("measurement", config.tolerance_scale);
    Rng rng(config.seed + 2);

    for (int trial = 0; trial < config.samples; ++trial) {
        const int db = 2 + static_cast<int>(rng.integer(2));
        const int da = 2 + static_cast<int>(rng.integer(2));
        const BipartiteState state = random_bipartite(rng, da, db);
        const int outcomes = db + static_cast<int>(rng.integer(3));
        const Rank1Povm povm = random_rank1_povm(rng, db, outcomes);

        // Probability and marginal consistency.
        double total = 0.0;
        MatrixXcd average = MatrixXcd::Zero(da, da);
        for (const PovmElement& e : povm.elements()) {
            const auto outcome = conditional_state(state, e);
            if (!outcome) continue;
            total += outcome->probability;
            average += outcome->probability * outcome->state.matrix();
        }
        h.check_near(total, 1.0, 1e-9, "outcome probabilities sum to 1");
        h.check((average - partial_trace(state, Subsystem::A).matrix()).cwiseAbs().maxCoeff() <
                    1e-9,
                "sum_j p_j rho_{A/j} = rho_A");

        // Coarse-graining keeps completeness.
        const int coarse_count = 2 + static_cast<int>(rng.integer(outcomes - 1));
        Eigen::MatrixXd mixing(coarse_count, outcomes);
        for (int k = 0; k < outcomes; ++k) {
            double sum = 0.0;
            for (int j = 0; j < coarse_count; ++j) {
                mixing(j, k) = rng.uniform();
                sum += mixing(j, k);
            }
            mixing.col(k) /= sum;
        }
        const auto coarse = refine(povm, mixing);
        MatrixXcd op_sum = MatrixXcd::Zero(db, db);
        for (const auto& op : coarse) {
            op_sum += op;
        }
        h.check((op_sum - MatrixXcd::Identity(db, db)).cwiseAbs().maxCoeff() < 1e-9,
                "coarse-grained POVM is complete");
    }

    // Pure global states leave pure conditionals.
    for (int trial = 0; trial < config.samples / 2 + 1; ++trial) {
        const int db = 2 + static_cast<int>(rng.integer(2));
        const BipartiteState state(2, db,
                                   DensityMatrix::pure(random_pure_vector(rng, 2 * db)));
        const Rank1Povm povm = random_rank1_povm(rng, db, db + 1);
        for (const PovmElement& e : povm.elements()) {
            const auto outcome = conditional_state(state, e);
            if (outcome) {
                h.check_near(outcome->state.purity(), 1.0, 1e-9,
                             "conditional of a pure state is pure");
            }
        }
    }

    // Direction POVMs: sum r_j k_j = 0 and |k_j|^2 = dB - 1.
    for (int trial = 0; trial < 20; ++trial) {
        const Rank1Povm povm = projective_from_direction(QubitDirection(random_direction(rng)));
        const auto vectors = povm.bloch_vectors();
        Eigen::VectorXd balance = Eigen::VectorXd::Zero(3);
        for (std::size_t j = 0; j < povm.size(); ++j) {
            balance += povm[j].weight * vectors[j];
            h.check_near(vectors[j].squaredNorm(), 1.0, 1e-10, "|k_j|^2 = dB - 1");
        }
        h.check(balance.norm() < 1e-10, "sum_j r_j k_j = 0");
    }

    return h.result;
}

SuiteResult validate_conditional(const ValidateConfig& config) {
    Harness h("conditional-entropy", config.tolerance_scale);
    Rng rng(config.seed + 3);
    const auto entropies = registered_entropies();

    for (int trial = 0; trial < config.samples; ++trial) {
        const int da = 2 + static_cast<int>(rng.integer(2));
        const int db = 2;
        const BipartiteState state = random_bipartite(rng, da, db);
        const int fine_count = db + 1 + static_cast<int>(rng.integer(2));
        const Rank1Povm fine = random_rank1_povm(rng, db, fine_count);
        const EntropicFunction& f = entropies[rng.integer(entropies.size())];

        // Gain non-negativity and the S_f(A) bound.
        const ConditionalResult fine_result = conditional_entropy(state, fine, f);
        h.check(fine_result.gain >= -default_tolerances().entropy, "I_f >= 0");

        // Refinement monotonicity: coarse >= fine.
        const int coarse_count = 2;
        Eigen::MatrixXd mixing(coarse_count, fine_count);
        for (int k = 0; k < fine_count; ++k) {
            double sum = 0.0;
            for (int j = 0; j < coarse_count; ++j) {
                mixing(j, k) = rng.uniform();
                sum += mixing(j, k);
            }
            mixing.col(k) /= sum;
        }
        const ConditionalResult coarse_result =
            conditional_entropy(state, refine(fine, mixing), f);
        h.check_le(fine_result.value, coarse_result.value, 1e-10,
                   "refinement does not increase S_f");

        // Concavity in the state at fixed POVM.
        const BipartiteState other = random_bipartite(rng, da, db);
        const double w = rng.uniform();
        const BipartiteState mix(
            da, db, DensityMatrix(w * state.matrix() + (1.0 - w) * other.matrix()));
        const double mixed_value = conditional_entropy(mix, fine, f).value;
        h.check_le(w * fine_result.value + (1.0 - w) * conditional_entropy(other, fine, f).value,
                   mixed_value, 1e-10, "conditional entropy concave in the state");

        // Quadratic closed form against the spectral path, both conventions.
        const BlochForm bloch = to_bloch(state);
        const double direct = conditional_entropy(state, fine, EntropicFunction::linear(1.0)).value;
        h.check_near(conditional_s2_closed_form(bloch, fine, 1.0), direct, 1e-10,
                     "S2 closed form matches spectral path");

        // Distance identities (plain alpha = 1 convention).
        double avg_dist_mm = 0.0;
        double avg_dist_marginal = 0.0;
        const MatrixXcd rho_a = partial_trace(state, Subsystem::A).matrix();
        for (const PovmElement& e : fine.elements()) {
            const auto outcome = conditional_state(state, e);
            if (!outcome) continue;
            avg_dist_mm += outcome->probability *
                           (outcome->state.matrix() -
                            MatrixXcd::Identity(da, da) / static_cast<double>(da))
                               .squaredNorm();
            avg_dist_marginal +=
                outcome->probability * (outcome->state.matrix() - rho_a).squaredNorm();
        }
        h.check_near(avg_dist_mm, (1.0 - 1.0 / da) - direct, 1e-10,
                     "average distance to I/dA identity");
        const double gain2 =
            conditional_entropy(state, fine, EntropicFunction::linear(1.0)).gain;
        h.check_near(avg_dist_marginal, gain2, 1e-10, "I_2 as average squared distance");

        // Purity gain ratio bounds.
        const double ratio = purity_gain_ratio(state, fine);
        h.check(ratio >= 1.0 - 1e-9 && ratio <= da + 1e-9, "1 <= R_2 <= dA");
    }

    // Two-qubit closed form against the generic path.
    for (int trial = 0; trial < config.samples; ++trial) {
        const BipartiteState state = random_bipartite(rng, 2, 2);
        const BlochForm bloch = to_bloch(state);
        const QubitDirection dir(random_direction(rng));
        const EntropicFunction& f = entropies[rng.integer(entropies.size())];
        const double closed = two_qubit_conditional_f(bloch, dir, f);
        const double generic =
            conditional_entropy(state, projective_from_direction(dir), f).value;
        h.check_near(closed, generic, 1e-10, "two-qubit closed form matches generic path");
    }

    // Closed-form minimum against a direct pointer-basis computation, and its bounds.
    for (int trial = 0; trial < config.samples / 2 + 1; ++trial) {
        const int da = 2 + static_cast<int>(rng.integer(2));
        const int db = 2;
        const double w = rng.uniform();
        std::vector<double> q = random_spectrum(rng, std::min(da, db));
        const BipartiteState state = pure_plus_mixed(w, q, da, db);
        const EntropicFunction& f = entropies[rng.integer(entropies.size())];
        const double closed = pure_plus_mixed_minimum(w, q, da, db, f);
        const double pointer =
            conditional_entropy(state, computational_povm(db), f).value;
        h.check_near(closed, pointer, 1e-10, "sfex closed form = pointer measurement value");
        h.check_le((1.0 - w) * da * f(1.0 / da), closed, 1e-10, "sfex lower bound");
        // Decreasing in w.
        const double later = pure_plus_mixed_minimum(std::min(1.0, w + 0.05), q, da, db, f);
        h.check_le(later, closed, 1e-10, "sfex decreasing in w");
    }

    // Near maximal mixedness all entropies align with S2.
    const int universality_samples = std::max(3, config.samples / 10);
    for (int trial = 0; trial < universality_samples; ++trial) {
        const BipartiteState state = perturbed_maximally_mixed(rng, 1e-3);
        MinimizeOptions options;
        const auto s2_min =
            minimize_conditional_entropy(state, EntropicFunction::linear(2.0), options);
        const auto vn_min =
            minimize_conditional_entropy(state, EntropicFunction::von_neumann(2.0), options);
        const double angle = QubitDirection(*s2_min.best_direction)
                                 .axis_angle_to(*vn_min.best_direction);
        h.check_le(angle, 1e-2, 0.0, "S and S2 minimizers align near I/4");
    }

    return h.result;
}

SuiteResult validate_analytic_s2(const ValidateConfig& config) {
    Harness h("analytic-s2", config.tolerance_scale);
    Rng rng(config.seed + 4);

    // Analytic maximum against the grid oracle.
    for (int trial = 0; trial < config.samples; ++trial) {
        const int da = (trial % 4 == 3) ? 3 : 2;
        const BipartiteState state = random_bipartite(rng, da, 2);
        const BlochForm bloch = to_bloch(state);
        const S2MinResult analytic = s2_minimize_qudit_qubit(bloch);
        const double oracle = i2_grid_maximize(bloch);
        h.check_near(analytic.i2_max, oracle, 1e-7, "analytic lambda_max matches grid oracle");

        // Scale invariance of the ratio.
        const Eigen::Vector3d k = random_direction(rng);
        const double c = rng.uniform(0.1, 5.0);
        h.check_near(quadratic_gain_direction(bloch, k),
                     quadratic_gain_direction(bloch, (c * k).eval()), 1e-12,
                     "gain ratio independent of |k|");

        // The eigenvector solves the generalized problem.
        if (analytic.k_defined) {
            const Eigen::Vector3d rb = bloch.r_b.head<3>();
            const Eigen::Matrix3d n_b = Eigen::Matrix3d::Identity() - rb * rb.transpose();
            const Eigen::Matrix3d ctc = bloch.c.transpose() * bloch.c;
            const double residual =
                (ctc * analytic.k_star - analytic.lambda_max * n_b * analytic.k_star).norm();
            h.check_le(residual, 1e-8, 0.0, "generalized eigenpair residual");
        }
    }

    // X-state inequality chain and agreement with the generalized eigenproblem.
    for (int trial = 0; trial < config.samples; ++trial) {
        const XStateParams params = random_x_params(rng);
        const BipartiteState state = x_state(params);
        const XStateI2 xs = x_state_i2(params);
        const double conc = concurrence(state);
        const double jmax = std::max(params.j_x * params.j_x, params.j_y * params.j_y);
        h.check_le(conc * conc, jmax, 1e-10, "C^2 <= max(Jx^2, Jy^2)");
        h.check_le(jmax, xs.i2, 1e-10, "max(Jx^2, Jy^2) <= I2");
        const S2MinResult general = s2_minimize_qudit_qubit(to_bloch(state), 2.0);
        h.check_near(xs.i2, general.i2_max, 1e-9, "X-state I2 matches general solver");
    }

    // Geometric discord bounds the squared negativity (rescaled convention).
    for (int trial = 0; trial < config.samples; ++trial) {
        const BipartiteState state = random_bipartite(rng, 2, 2);
        const double gd = geometric_discord(to_bloch(state), 2.0);
        const double neg = negativity(state);
        h.check_le(neg * neg, gd, 1e-9, "N^2 <= D2");
    }
    for (int trial = 0; trial < 20; ++trial) {
        const BipartiteState pure(2, 2, DensityMatrix::pure(random_pure_vector(rng, 4)));
        const double gd = geometric_discord(to_bloch(pure), 2.0);
        const double neg = negativity(pure);
        h.check_near(gd, neg * neg, 1e-8, "pure states: D2 = N^2");
    }

    // Classically correlated states: lambda formula and pointer direction.
    for (int trial = 0; trial < config.samples / 2 + 1; ++trial) {
        const int da = 2 + static_cast<int>(rng.integer(2));
        const BipartiteState state = random_classically_correlated(rng, da, 2);
        const BlochForm bloch = to_bloch(state);
        const double rb = bloch.r_b(2);
        const Eigen::VectorXd c_z = bloch.j.col(2) - rb * bloch.r_a;
        const double expected = c_z.squaredNorm() / (1.0 - rb * rb);
        const S2MinResult analytic = s2_minimize_qudit_qubit(bloch);
        h.check_near(analytic.lambda_max, expected, 1e-9,
                     "classical lambda_max = |J - rB rA|^2 / (1 - rB^2)");
        if (analytic.k_defined && !analytic.degenerate && analytic.lambda_max > 1e-6) {
            h.check_le(QubitDirection(analytic.k_star).axis_angle_to(Eigen::Vector3d::UnitZ()),
                       1e-6, 0.0, "classical minimizer along the pointer axis");
        }
    }

    return h.result;
}

SuiteResult validate_correlations(const ValidateConfig& config) {
    Harness h("correlations", config.tolerance_scale);
    Rng rng(config.seed + 5);

    // Discord non-negativity on random states, zero on classical states.
    const int discord_samples = std::max(4, 2 * config.samples);
    for (int trial = 0; trial < discord_samples; ++trial) {
        const BipartiteState state = random_bipartite(rng, 2, 2);
        h.check(quantum_discord(state) >= -2e-6, "discord >= 0");
    }
    for (int trial = 0; trial < discord_samples; ++trial) {
        const BipartiteState state = random_classically_correlated(rng, 2, 2);
        h.check_near(quantum_discord(state), 0.0, 2e-6, "discord vanishes on classical states");
    }
    {
        const BipartiteState product = random_product(rng, 2, 2);
        h.check_near(quantum_discord(product), 0.0, 2e-6, "discord vanishes on product states");
    }

    // Entanglement measures.
    h.check_near(concurrence(bell_state()), 1.0, 1e-12, "Bell concurrence");
    h.check_near(negativity(bell_state()), 1.0, 1e-12, "Bell negativity");
    for (int trial = 0; trial < 10; ++trial) {
        const BipartiteState separable = random_separable(rng, 2, 2, 4);
        h.check_near(negativity(separable), 0.0, 1e-9, "separable negativity vanishes");
    }
    for (int trial = 0; trial < config.samples; ++trial) {
        const XStateParams p = random_x_params(rng);
        const double a_plus = (p.j_x + p.j_y) / 4.0;
        const double a_minus = (p.j_x - p.j_y) / 4.0;
        const double p_plus = (1.0 + (p.r_a + p.r_b) + p.j_z) / 4.0;
        const double p_minus = (1.0 - (p.r_a + p.r_b) + p.j_z) / 4.0;
        const double q_plus = (1.0 + (p.r_a - p.r_b) - p.j_z) / 4.0;
        const double q_minus = (1.0 - (p.r_a - p.r_b) - p.j_z) / 4.0;
        const double closed =
            2.0 * std::max({std::abs(a_plus) - std::sqrt(p_plus * p_minus),
                            std::abs(a_minus) - std::sqrt(q_plus * q_minus), 0.0});
        h.check_near(concurrence(x_state(p)), closed, 1e-10, "X-state concurrence closed form");
    }

    // Minimizers: universal cases reach the known optima.
    {
        MinimizeOptions options;
        const BipartiteState classical = random_classically_correlated(rng, 2, 2);
        const EntropicFunction f = EntropicFunction::von_neumann(2.0);
        const double pointer = conditional_entropy(classical, computational_povm(2), f).value;
        const auto outcome = minimize_conditional_entropy(classical, f, options);
        h.check_near(outcome.best_value, pointer, 1e-8, "pointer basis optimal (classical)");

        const double w = rng.uniform(0.2, 0.9);
        const std::vector<double> q = {0.3, 0.7};
        const BipartiteState pm = pure_plus_mixed(w, q, 2, 2);
        const double closed = pure_plus_mixed_minimum(w, q, 2, 2, f);
        const auto pm_outcome = minimize_conditional_entropy(pm, f, options);
        h.check_near(pm_outcome.best_value, closed, 1e-8, "Schmidt basis optimal (pure+mixed)");

        // Linear entropy: numerical minimizer matches the analytic solver.
        const BipartiteState state = random_bipartite(rng, 2, 2);
        const auto linear_outcome =
            minimize_conditional_entropy(state, EntropicFunction::linear(2.0), options);
        const S2MinResult analytic = s2_minimize_qudit_qubit(to_bloch(state), 2.0);
        h.check_near(linear_outcome.best_value, analytic.s2_min, 1e-7,
                     "numerical S2 minimizer matches analytic");
    }

    // Greater entanglement (majorization order) raises the conditional
    // entropy of the mixture at fixed w.
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<double> q_prime = random_spectrum(rng, 2);
        const double t = rng.uniform();
        std::vector<double> q(q_prime.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = t * q_prime[i] + (1.0 - t) / q.size();  // q majorized by q_prime
        }
        const double w = rng.uniform(0.1, 0.9);
        for (const auto& f : registered_entropies()) {
            h.check_le(pure_plus_mixed_minimum(w, q_prime, 2, 2, f),
                       pure_plus_mixed_minimum(w, q, 2, 2, f), 1e-11,
                       "more entangled Schmidt vector gives larger S_f(A|B)");
        }
    }

    // EoF of a pure state is the marginal entropy.
    {
        const BipartiteState pure(2, 2, DensityMatrix::pure(random_pure_vector(rng, 4)));
        const EntropicFunction f = EntropicFunction::linear(2.0);
        MinimizeOptions options;
        options.restarts = 4;
        const EofResult eof = eof_bruteforce(pure, f, 2, options);
        h.check_near(eof.value, entropy(partial_trace(pure, Subsystem::A), f), 1e-9,
                     "EoF of a pure state");
    }

    // Purification identity S_f(A|B) = E_f(A, C) on rank-2 and rank-3 states,
    // plus the POVM-vs-projective sanity direction.
    const int idf_samples = std::max(2, config.samples / 50);
    for (int trial = 0; trial < idf_samples; ++trial) {
        const int rank = trial % 2 == 0 ? 2 : 3;
        const BipartiteState rho_ab = random_bipartite(rng, 2, 2, rank);
        const Purification pur = purify(rho_ab);
        const BipartiteState rho_ac = purified_ac_state(pur, 2, 2);

        for (const EntropicFunction& f :
             {EntropicFunction::von_neumann(2.0), EntropicFunction::linear(2.0)}) {
            MinimizeOptions povm_options;
            povm_options.mode = MinimizeOptions::Mode::Povm;
            povm_options.povm_outcomes = rank + 2;
            povm_options.restarts = 12;
            const auto measurement = minimize_conditional_entropy(rho_ab, f, povm_options);

            MinimizeOptions eof_options;
            eof_options.restarts = 12;
            const double eof =
                std::min(eof_bruteforce(rho_ac, f, rank, eof_options).value,
                         eof_bruteforce(rho_ac, f, rank + 2, eof_options).value);
            h.check_near(measurement.best_value, eof, 2e-6,
                         "S_f(A|B) = E_f(A,C) for " + f.label());

            MinimizeOptions proj;
            const auto projective = minimize_conditional_entropy(rho_ab, f, proj);
            h.check_le(measurement.best_value, projective.best_value, 1e-9,
                       "POVM minimum <= projective minimum");
        }
    }

    // Decomposition <-> measurement correspondence round trip.
    for (int trial = 0; trial < 5; ++trial) {
        const BipartiteState rho_ab = random_bipartite(rng, 2, 2, 2);
        const Purification pur = purify(rho_ab);
        const BipartiteState rho_ac = purified_ac_state(pur, 2, 2);
        MinimizeOptions options;
        options.restarts = 3;
        const EofResult eof = eof_bruteforce(rho_ac, EntropicFunction::linear(2.0), 3, options);
        const Rank1Povm povm = decomposition_to_measurement(eof.ensemble, pur, 2, 2);

        // Measuring B with the POVM reproduces the ensemble members on AC.
        const int dc = pur.dim_c;
        int matched = 0;
        for (const auto& [p_j, member] : eof.ensemble.members) {
            bool found = false;
            for (const PovmElement& e : povm.elements()) {
                // <j_B|Psi> on A x C.
                VectorXcd projected = VectorXcd::Zero(2 * dc);
                for (int a = 0; a < 2; ++a) {
                    for (int c = 0; c < dc; ++c) {
                        Complex sum = 0.0;
                        for (int b = 0; b < 2; ++b) {
                            sum += std::conj(e.ket(b)) * pur.psi((a * 2 + b) * dc + c);
                        }
                        projected(a * dc + c) = sum;
                    }
                }
                projected *= std::sqrt(e.weight);
                const double p = projected.squaredNorm();
                if (std::abs(p - p_j) > 1e-7) continue;
                projected /= std::sqrt(p);
                const double overlap = std::abs(projected.dot(member));
                if (std::abs(overlap - 1.0) < 1e-7) {
                    found = true;
                    break;
                }
            }
            matched += found ? 1 : 0;
        }
        h.check(matched == static_cast<int>(eof.ensemble.members.size()),
                "measurement reproduces the decomposition ensemble");
    }

    return h.result;
}

std::vector<SuiteResult> run_validation_suites(const ValidateConfig& config) {
    return {validate_entropy(config),     validate_states(config),
            validate_measurement(config), validate_conditional(config),
            validate_analytic_s2(config), validate_correlations(config)};
}

}  // namespace qce
