#include <doctest.h>

#include <cmath>

#include "qce/density_matrix.hpp"
#include "qce/entropy.hpp"
#include "qce/random_states.hpp"

using namespace qce;

namespace {

MatrixXcd diag2(double a, double b) {
    MatrixXcd m = MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("maximally mixed qubit scores 1 in the rescaled linear convention") {
    const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
    CHECK(entropy(rho, EntropicFunction::linear(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    // Tsallis with the qubit normalization agrees at every index.
    for (double q : {1.5, 2.0, 3.0}) {
        CHECK(entropy(rho, EntropicFunction::tsallis(q)) ==
              doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(entropy(rho, EntropicFunction::von_neumann(2.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pure states have zero entropy for every f") {
    Rng rng(11);
    for (int d : {2, 3, 5}) {
        const DensityMatrix pure = DensityMatrix::pure(random_pure_vector(rng, d));
        for (const auto& f :
             {EntropicFunction::von_neumann(2.0), EntropicFunction::linear(1.0),
              EntropicFunction::tsallis(1.7)}) {
            CHECK(std::abs(entropy(pure, f)) < 1e-12);
        }
    }
}

TEST_CASE("von Neumann value on diag(3/4, 1/4)") {
    // Oracle: -sum p log2 p evaluated directly.
    const double oracle = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
    CHECK(oracle == doctest::Approx(0.8112781244591328).epsilon(1e-15));
    const DensityMatrix rho(diag2(0.75, 0.25));
    CHECK(entropy(rho, EntropicFunction::von_neumann(2.0)) ==
          doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("entropy respects the d f(1/d) ceiling") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng.integer(4));
        const DensityMatrix rho = random_density(rng, d);
        for (const auto& f : {EntropicFunction::von_neumann(2.0), EntropicFunction::linear(1.0),
                              EntropicFunction::tsallis(2.5)}) {
            const double value = entropy(rho, f);
            CHECK(value >= -1e-12);
            CHECK(value <= d * f(1.0 / d) + 1e-12);
        }
    }
}

TEST_CASE("invalid density matrices are rejected") {
    MatrixXcd bad = diag2(0.75, 0.25);
    bad(0, 1) = Complex(0.1, 0.0);  // not Hermitian
    CHECK_THROWS_AS(DensityMatrix{bad}, invalid_state_error);

    CHECK_THROWS_AS(DensityMatrix{diag2(0.8, 0.3)}, invalid_state_error);  // trace 1.1
    CHECK_THROWS_AS(DensityMatrix{diag2(1.1, -0.1)}, invalid_state_error);  // negative eigenvalue
}

TEST_CASE("majorization") {
    CHECK(majorizes(Spectrum({0.5, 0.5}), Spectrum({1.0, 0.0})));
    CHECK(majorizes(Spectrum({0.3, 0.3, 0.4}), Spectrum({0.3, 0.4, 0.3})));  // reflexive
    CHECK(majorizes(Spectrum({0.5, 0.3, 0.2}), Spectrum({0.6, 0.2, 0.2})));
    CHECK_FALSE(majorizes(Spectrum({0.6, 0.2, 0.2}), Spectrum({0.5, 0.3, 0.2})));
    // Shorter spectra are zero-padded.
    CHECK(majorizes(Spectrum({0.5, 0.25, 0.25}), Spectrum({0.6, 0.4})));
}

TEST_CASE("Tsallis normalizations") {
    // q = 2 with the 1/(q-1) scale is exactly the unit linear entropy.
    const DensityMatrix rho(diag2(0.7, 0.3));
    CHECK(entropy(rho, EntropicFunction::tsallis(2.0, TsallisScale::OverQMinusOne)) ==
          doctest::Approx(entropy(rho, EntropicFunction::linear(1.0))).epsilon(1e-14));
    CHECK(entropy(rho, EntropicFunction::tsallis(2.0)) ==
          doctest::Approx(entropy(rho, EntropicFunction::linear(2.0))).epsilon(1e-14));
}

TEST_CASE("classical conditional entropy") {
    const EntropicFunction shannon = EntropicFunction::von_neumann(2.0);

    SUBCASE("independent variables give S_f(A)") {
        Eigen::MatrixXd joint(2, 3);
        const double qa[2] = {0.3, 0.7};
        const double pb[3] = {0.2, 0.5, 0.3};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 3; ++j) {
                joint(i, j) = qa[i] * pb[j];
            }
        }
        const double s_a = shannon(0.3) + shannon(0.7);
        CHECK(classical_conditional_entropy(joint, shannon) ==
              doctest::Approx(s_a).epsilon(1e-14));
    }

    SUBCASE("perfect correlation gives zero") {
        Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(2, 2);
        joint(0, 0) = 0.5;
        joint(1, 1) = 0.5;
        CHECK(classical_conditional_entropy(joint, shannon) == doctest::Approx(0.0));
    }

    SUBCASE("Shannon case reduces to S(A,B) - S(B)") {
        Eigen::MatrixXd joint(2, 2);
        joint << 0.4, 0.1, 0.2, 0.3;
        double s_ab = 0.0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                s_ab -= joint(i, j) * std::log2(joint(i, j));
            }
        }
        const double pb[2] = {joint.col(0).sum(), joint.col(1).sum()};
        const double s_b = -(pb[0] * std::log2(pb[0]) + pb[1] * std::log2(pb[1]));
        CHECK(classical_conditional_entropy(joint, shannon) ==
              doctest::Approx(s_ab - s_b).epsilon(1e-14));
    }

    SUBCASE("bad distributions are rejected") {
        Eigen::MatrixXd negative(2, 2);
        negative << 0.6, -0.1, 0.3, 0.2;
        CHECK_THROWS_AS(classical_conditional_entropy(negative, shannon),
                        invalid_distribution_error);
        Eigen::MatrixXd unnormalized(2, 2);
        unnormalized << 0.4, 0.1, 0.2, 0.2;
        CHECK_THROWS_AS(classical_conditional_entropy(unnormalized, shannon),
                        invalid_distribution_error);
    }
}

TEST_CASE("endpoints of f are exact zeros") {
    for (const auto& f : {EntropicFunction::von_neumann(2.0), EntropicFunction::von_neumann(M_E),
                          EntropicFunction::linear(2.0), EntropicFunction::tsallis(0.5),
                          EntropicFunction::tsallis(3.0)}) {
        CHECK(f(0.0) == 0.0);
        CHECK(f(1.0) == 0.0);
    }
}

TEST_CASE("spectrum validation") {
    CHECK_THROWS_AS(Spectrum({0.5, 0.4}), invalid_distribution_error);
    CHECK_THROWS_AS(Spectrum({1.2, -0.2}), invalid_distribution_error);
    const Spectrum clamped({1.0 + 1e-12, -1e-12});
    CHECK(clamped[1] == 0.0);  // tiny negative clamped
}

}  // TEST_SUITE
