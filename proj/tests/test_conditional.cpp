#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "qce/conditional.hpp"
#include "qce/families.hpp"
#include "qce/random_states.hpp"

using namespace qce;

TEST_SUITE("conditional") {

TEST_CASE("pure global states give zero conditional entropy") {
    Rng rng(41);
    const BipartiteState pure(3, 2, DensityMatrix::pure(random_pure_vector(rng, 6)));
    for (int trial = 0; trial < 5; ++trial) {
        const Rank1Povm povm = random_rank1_povm(rng, 2, 2 + trial % 3);
        const ConditionalResult result =
            conditional_entropy(pure, povm, EntropicFunction::von_neumann(2.0));
        CHECK(std::abs(result.value) < 1e-9);
    }
}

TEST_CASE("product states keep S_f(A)") {
    Rng rng(42);
    const BipartiteState product = random_product(rng, 2, 2);
    const EntropicFunction f = EntropicFunction::tsallis(1.5);
    const double s_a = entropy(partial_trace(product, Subsystem::A), f);
    const Rank1Povm povm = random_rank1_povm(rng, 2, 4);
    const ConditionalResult result = conditional_entropy(product, povm, f);
    CHECK(result.value == doctest::Approx(s_a).epsilon(1e-11));
    CHECK(std::abs(result.gain) < 1e-11);
}

TEST_CASE("classical states saturate at the pointer measurement") {
    Rng rng(43);
    const DensityMatrix rho0 = random_density(rng, 2);
    const DensityMatrix rho1 = random_density(rng, 2);
    const std::vector<double> q = {0.35, 0.65};
    const BipartiteState state = classically_correlated(q, {rho0, rho1}, 2);
    const EntropicFunction f = EntropicFunction::von_neumann(2.0);
    const double expected = q[0] * entropy(rho0, f) + q[1] * entropy(rho1, f);
    CHECK(conditional_entropy(state, computational_povm(2), f).value ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("quadratic closed form") {
    SUBCASE("C = 0 gives S2(A)") {
        Rng rng(44);
        const BipartiteState product = random_product(rng, 3, 2);
        const BlochForm bloch = to_bloch(product);
        const double s2_a =
            entropy(partial_trace(product, Subsystem::A), EntropicFunction::linear(1.0));
        const Rank1Povm povm = random_rank1_povm(rng, 2, 3);
        CHECK(conditional_s2_closed_form(bloch, povm) == doctest::Approx(s2_a).epsilon(1e-12));
    }
    SUBCASE("aligned mixture measured along x gives sin^2(2 theta)/4 rescaled") {
        for (double theta : {0.3, 0.7853981633974483, 1.2}) {
            const BlochForm bloch = to_bloch(aligned_mixture(theta));
            const Rank1Povm along_x = projective_from_direction(QubitDirection::x());
            const double expected = 0.25 * std::pow(std::sin(2 * theta), 2);
            CHECK(conditional_s2_closed_form(bloch, along_x, 2.0) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("matches the spectral path on random states and POVMs") {
        Rng rng(45);
        for (int trial = 0; trial < 30; ++trial) {
            const BipartiteState state = random_bipartite(rng, 2, 2);
            const Rank1Povm povm = random_rank1_povm(rng, 2, 2 + trial % 3);
            const double spectral =
                conditional_entropy(state, povm, EntropicFunction::linear(1.0)).value;
            CHECK(conditional_s2_closed_form(to_bloch(state), povm) ==
                  doctest::Approx(spectral).epsilon(1e-10));
        }
    }
}

TEST_CASE("purity gain ratio") {
    Rng rng(46);
    SUBCASE("product states gain nothing") {
        const BipartiteState product = random_product(rng, 2, 2);
        const Rank1Povm povm = random_rank1_povm(rng, 2, 3);
        CHECK(purity_gain_ratio(product, povm) == doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("Bell state doubles its purity under any projective measurement") {
        for (int trial = 0; trial < 5; ++trial) {
            const Rank1Povm povm =
                projective_from_direction(QubitDirection(random_direction(rng)));
            CHECK(purity_gain_ratio(bell_state(), povm) == doctest::Approx(2.0).epsilon(1e-11));
        }
    }
    SUBCASE("unchanged by an ancilla on the A side") {
        const BipartiteState state = random_bipartite(rng, 2, 2);
        const Rank1Povm povm = random_rank1_povm(rng, 2, 3);
        const DensityMatrix ancilla = random_density(rng, 2);
        const BipartiteState extended(
            4, 2, DensityMatrix(Eigen::kroneckerProduct(ancilla.matrix(), state.matrix())));
        CHECK(purity_gain_ratio(extended, povm) ==
              doctest::Approx(purity_gain_ratio(state, povm)).epsilon(1e-11));
    }
}

TEST_CASE("two-qubit closed form") {
    Rng rng(47);
    SUBCASE("principal axes of an X state are stationary") {
        for (int trial = 0; trial < 10; ++trial) {
            const XStateParams params = random_x_params(rng);
            const BlochForm bloch = to_bloch(x_state(params));
            const EntropicFunction f = EntropicFunction::von_neumann(2.0);
            const double h = 1e-5;
            for (const Eigen::Vector3d& axis :
                 {Eigen::Vector3d::UnitX().eval(), Eigen::Vector3d::UnitY().eval(),
                  Eigen::Vector3d::UnitZ().eval()}) {
                for (const Eigen::Vector3d& tangent :
                     {Eigen::Vector3d(axis(2), axis(0), axis(1)),
                      Eigen::Vector3d(axis(1), axis(2), axis(0))}) {
                    const Eigen::Vector3d fwd = (axis + h * tangent).normalized();
                    const Eigen::Vector3d bwd = (axis - h * tangent).normalized();
                    const double derivative =
                        (two_qubit_conditional_f(bloch, QubitDirection(fwd), f) -
                         two_qubit_conditional_f(bloch, QubitDirection(bwd), f)) /
                        (2 * h);
                    CHECK(std::abs(derivative) < 1e-6);
                }
            }
        }
    }
    SUBCASE("pure+mixed along z reproduces the closed-form minimum") {
        for (double w : {0.2, 0.5, 0.9}) {
            for (double q : {0.0, 0.3, 0.5}) {
                const BipartiteState state = pure_plus_mixed(w, {q, 1 - q}, 2, 2);
                const double c2 = (1 - 2 * q) * (1 - 2 * q);
                const double smin =
                    (1 - w) * (1 + w - 2 * w * w * c2) / (1 - w * w * c2);
                CHECK(two_qubit_conditional_f(to_bloch(state), QubitDirection::z(),
                                              EntropicFunction::linear(2.0)) ==
                      doctest::Approx(smin).epsilon(1e-12));
            }
        }
    }
    SUBCASE("C = 0 gives S_f(A) for every direction") {
        const BipartiteState product = random_product(rng, 2, 2);
        const BlochForm bloch = to_bloch(product);
        const EntropicFunction f = EntropicFunction::tsallis(2.5);
        const double s_a = entropy(partial_trace(product, Subsystem::A), f);
        for (int trial = 0; trial < 5; ++trial) {
            CHECK(two_qubit_conditional_f(bloch, QubitDirection(random_direction(rng)), f) ==
                  doctest::Approx(s_a).epsilon(1e-11));
        }
    }
}

TEST_CASE("pure_plus_mixed_minimum closed form") {
    const EntropicFunction vn = EntropicFunction::von_neumann(2.0);
    SUBCASE("w = 1 vanishes, w = 0 is maximal") {
        CHECK(pure_plus_mixed_minimum(1.0, {0.3, 0.7}, 2, 2, vn) == doctest::Approx(0.0));
        CHECK(pure_plus_mixed_minimum(0.0, {0.3, 0.7}, 2, 2, vn) ==
              doctest::Approx(2 * vn(0.5)).epsilon(1e-13));
        CHECK(pure_plus_mixed_minimum(0.0, {0.3, 0.7}, 3, 2, vn) ==
              doctest::Approx(3 * vn(1.0 / 3)).epsilon(1e-13));
    }
    SUBCASE("two-qubit rescaled linear case matches the rational closed form") {
        for (double w : {0.1, 0.45, 0.8}) {
            for (double q : {0.0, 0.2, 0.5}) {
                const double c2 = (1 - 2 * q) * (1 - 2 * q);
                const double smin = (1 - w) * (1 + w - 2 * w * w * c2) / (1 - w * w * c2);
                CHECK(pure_plus_mixed_minimum(w, {q, 1 - q}, 2, 2,
                                              EntropicFunction::linear(2.0)) ==
                      doctest::Approx(smin).epsilon(1e-12));
            }
        }
    }
    SUBCASE("concave and decreasing in w") {
        const std::vector<double> q = {0.25, 0.75};
        double previous = pure_plus_mixed_minimum(0.0, q, 2, 2, vn);
        for (int i = 1; i <= 20; ++i) {
            const double w = i / 20.0;
            const double value = pure_plus_mixed_minimum(w, q, 2, 2, vn);
            CHECK(value <= previous + 1e-12);
            previous = value;
        }
        for (int i = 1; i < 20; ++i) {
            const double w = i / 20.0;
            const double mid = pure_plus_mixed_minimum(w, q, 2, 2, vn);
            const double avg = 0.5 * (pure_plus_mixed_minimum(w - 0.05, q, 2, 2, vn) +
                                      pure_plus_mixed_minimum(w + 0.05, q, 2, 2, vn));
            CHECK(mid >= avg - 1e-12);
        }
    }
}

}  // TEST_SUITE
