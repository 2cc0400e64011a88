#include <doctest.h>

#include <cmath>

#include "qce/analytic_s2.hpp"
#include "qce/bloch.hpp"
#include "qce/conditional.hpp"
#include "qce/random_states.hpp"

using namespace qce;

TEST_SUITE("analytic_s2") {

TEST_CASE("Bell state: lambda_max = 1, rescaled S2(A|B) = 0") {
    const S2MinResult result = s2_minimize_qudit_qubit(to_bloch(bell_state()), 2.0);
    CHECK(result.lambda_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.s2_min == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(result.i2_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.degenerate);  // C^t C = I, all directions tie
}

TEST_CASE("rB = 0 reduces to the top eigenvalue of C^t C") {
    Rng rng(51);
    // X states with rA = rB = 0 have maximally mixed marginals.
    XStateParams p;
    p.j_x = 0.4;
    p.j_y = -0.2;
    p.j_z = 0.3;
    const BlochForm bloch = to_bloch(x_state(p));
    const S2MinResult result = s2_minimize_qudit_qubit(bloch);
    CHECK(result.lambda_max == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(std::abs(result.k_star(0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classically correlated states select the pointer axis") {
    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const BipartiteState state = random_classically_correlated(rng, 2, 2);
        const BlochForm bloch = to_bloch(state);
        const S2MinResult result = s2_minimize_qudit_qubit(bloch);
        const double rb = bloch.r_b(2);
        const Eigen::VectorXd c_col = bloch.j.col(2) - rb * bloch.r_a;
        CHECK(result.lambda_max ==
              doctest::Approx(c_col.squaredNorm() / (1 - rb * rb)).epsilon(1e-9));
        if (!result.degenerate && result.lambda_max > 1e-8) {
            CHECK(std::abs(result.k_star(2)) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("product shortcut fires when B is pure") {
    VectorXcd ket(4);
    ket << 1, 0, 0, 0;
    const BipartiteState product(2, 2, DensityMatrix::pure(ket));
    const S2MinResult result = s2_minimize_qudit_qubit(to_bloch(product));
    CHECK_FALSE(result.k_defined);
    CHECK(result.lambda_max == 0.0);
    CHECK(result.i2_max == 0.0);
}

TEST_CASE("analytic maximum agrees with the grid oracle") {
    Rng rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        const int da = trial % 2 == 0 ? 2 : 3;
        const BlochForm bloch = to_bloch(random_bipartite(rng, da, 2));
        const double analytic = s2_minimize_qudit_qubit(bloch).i2_max;
        CHECK(analytic == doctest::Approx(i2_grid_maximize(bloch)).epsilon(5e-7));
    }
}

TEST_CASE("minimum value matches the direct closed form at k_star") {
    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        const BipartiteState state = random_bipartite(rng, 2, 2);
        const BlochForm bloch = to_bloch(state);
        const S2MinResult result = s2_minimize_qudit_qubit(bloch, 2.0);
        if (!result.k_defined) continue;
        const Rank1Povm povm = projective_from_direction(QubitDirection(result.k_star));
        CHECK(conditional_s2_closed_form(bloch, povm, 2.0) ==
              doctest::Approx(result.s2_min).epsilon(1e-10));
    }
}

TEST_CASE("x_state_i2 candidates and tie-breaking") {
    SUBCASE("pure+mixed at q = 1/2 is fully degenerate with i2 = w^2") {
        for (double w : {0.3, 0.8}) {
            XStateParams p;
            p.r_a = p.r_b = 0.0;
            p.j_x = w;
            p.j_y = -w;
            p.j_z = w;
            const XStateI2 result = x_state_i2(p);
            CHECK(result.i2 == doctest::Approx(w * w).epsilon(1e-12));
            CHECK(result.degenerate);
            CHECK(result.axis == Axis::Z);  // tie resolved in favor of z
        }
    }
    SUBCASE("aligned mixture prefers x with i2 = sin^4(theta)") {
        for (double theta : {0.2, 0.9, M_PI / 2}) {
            XStateParams p;
            const double c = std::cos(theta);
            const double s2 = 1 - c * c;
            p.r_a = p.r_b = c;
            p.j_x = s2;
            p.j_y = 0.0;
            p.j_z = c * c;
            const XStateI2 result = x_state_i2(p);
            CHECK(result.axis == Axis::X);
            CHECK(result.i2 == doctest::Approx(s2 * s2).epsilon(1e-12));
        }
    }
    SUBCASE("all-zero parameters give zero gain") {
        CHECK(x_state_i2({}).i2 == 0.0);
    }
    SUBCASE("agrees with the general eigen-solver") {
        Rng rng(55);
        for (int trial = 0; trial < 30; ++trial) {
            const XStateParams p = random_x_params(rng);
            const XStateI2 xs = x_state_i2(p);
            const S2MinResult general = s2_minimize_qudit_qubit(to_bloch(x_state(p)), 2.0);
            CHECK(xs.i2 == doctest::Approx(general.i2_max).epsilon(1e-9));
        }
    }
}

TEST_CASE("geometric discord") {
    SUBCASE("vanishes on product states") {
        Rng rng(56);
        const BipartiteState product = random_product(rng, 2, 2);
        CHECK(geometric_discord(to_bloch(product), 2.0) == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("aligned-family axis flips at cos^2 theta = 1/3") {
        auto gd_axis = [](double theta) {
            const GeometricDiscordResult gd =
                geometric_discord_full(to_bloch(aligned_mixture(theta)), 2.0);
            return std::abs(gd.k_star(0)) > std::abs(gd.k_star(2)) ? Axis::X : Axis::Z;
        };
        const TransitionMap map = transition_map(gd_axis, 0.1, 1.4, 66, 1e-7);
        REQUIRE(map.transitions.size() == 1);
        const double critical = map.transitions.front();
        CHECK(std::cos(critical) * std::cos(critical) == doctest::Approx(1.0 / 3).epsilon(1e-4));
        CHECK(gd_axis(critical - 0.01) == Axis::Z);
        CHECK(gd_axis(critical + 0.01) == Axis::X);
    }
    SUBCASE("X-state closed form (rescaled)") {
        Rng rng(57);
        for (int trial = 0; trial < 20; ++trial) {
            const XStateParams p = random_x_params(rng);
            const BlochForm bloch = to_bloch(x_state(p));
            const double j2 = p.j_x * p.j_x + p.j_y * p.j_y + p.j_z * p.j_z;
            const double top = std::max({p.j_x * p.j_x, p.j_y * p.j_y,
                                         p.j_z * p.j_z + p.r_b * p.r_b});
            const double expected = 0.5 * (p.r_b * p.r_b + j2 - top);
            CHECK(geometric_discord(bloch, 2.0) == doctest::Approx(expected).epsilon(1e-10));
        }
    }
    SUBCASE("equals the minimal S2 increase under unread projective measurements") {
        // Independent route: scan directions, dephase, compare global S2.
        Rng rng(59);
        for (int trial = 0; trial < 5; ++trial) {
            const BipartiteState state = random_bipartite(rng, 2, 2);
            const double s2_before = entropy(state.rho(), EntropicFunction::linear(1.0));
            double best = 1e9;
            const int grid = 72;
            for (int i = 0; i <= grid; ++i) {
                for (int j = 0; j < 2 * grid; ++j) {
                    const QubitDirection dir =
                        QubitDirection::from_angles(M_PI * i / grid, M_PI * j / grid);
                    const DensityMatrix after =
                        unread_measurement_state(state, projective_from_direction(dir));
                    best = std::min(best,
                                    entropy(after, EntropicFunction::linear(1.0)) - s2_before);
                }
            }
            CHECK(geometric_discord(to_bloch(state), 1.0) ==
                  doctest::Approx(best).epsilon(5e-4));
        }
    }
    SUBCASE("rB = 0: same minimizing axis as S2") {
        Rng rng(58);
        for (int trial = 0; trial < 10; ++trial) {
            XStateParams p = random_x_params(rng);
            p.r_a = 0.0;
            p.r_b = 0.0;
            const BlochForm bloch = to_bloch(x_state(p));
            const S2MinResult s2 = s2_minimize_qudit_qubit(bloch);
            const GeometricDiscordResult gd = geometric_discord_full(bloch);
            if (!s2.degenerate && !gd.degenerate) {
                CHECK(std::abs(s2.k_star.dot(gd.k_star)) == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("transition maps over families") {
    SUBCASE("pure+mixed stays on z for q != 1/2") {
        auto family = [](double w) {
            XStateParams p;
            const double q = 0.2;
            p.r_a = p.r_b = w * (2 * q - 1);
            p.j_x = 2 * w * std::sqrt(q * (1 - q));
            p.j_y = -p.j_x;
            p.j_z = w;
            return p;
        };
        const TransitionMap map = s2_transition_map(family, 0.05, 0.95, 40);
        CHECK(map.transitions.empty());
        for (const auto& [w, axis] : map.samples) {
            CHECK(axis == Axis::Z);
        }
    }
    SUBCASE("aligned family stays on x over (0, pi/2]") {
        auto family = [](double theta) {
            XStateParams p;
            const double c = std::cos(theta);
            p.r_a = p.r_b = c;
            p.j_x = 1 - c * c;
            p.j_y = 0.0;
            p.j_z = c * c;
            return p;
        };
        const TransitionMap map = s2_transition_map(family, 1e-3, M_PI / 2, 50);
        CHECK(map.transitions.empty());
        for (const auto& [theta, axis] : map.samples) {
            CHECK(axis == Axis::X);
        }
    }
    SUBCASE("strong-field interacting pair minimizes along x") {
        for (double field : {10.0, 40.0}) {
            const Eigen::MatrixXd alpha = xy_chain_amplitudes(6, 1.0, 0.3, field);
            const BlochForm bloch = to_bloch(xy_strong_field_pair(alpha, 2, 3));
            XStateParams p;
            p.r_a = bloch.r_a(2);
            p.r_b = bloch.r_b(2);
            p.j_x = bloch.j(0, 0);
            p.j_y = bloch.j(1, 1);
            p.j_z = bloch.j(2, 2);
            CHECK(x_state_i2(p).axis == Axis::X);
        }
    }
}

}  // TEST_SUITE
