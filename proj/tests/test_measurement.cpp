#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "qce/families.hpp"
#include "qce/measurement.hpp"
#include "qce/random_states.hpp"

using namespace qce;

TEST_SUITE("measurement") {

TEST_CASE("projective measurements along coordinate axes") {
    const Rank1Povm along_z = projective_from_direction(QubitDirection::z());
    CHECK(std::abs(along_z[0].ket(0)) == doctest::Approx(1.0));
    CHECK(std::abs(along_z[1].ket(1)) == doctest::Approx(1.0));

    const Rank1Povm along_x = projective_from_direction(QubitDirection::x());
    for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(along_x[j].ket(0)) == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(std::abs(along_x[j].ket(1)) == doctest::Approx(1 / std::sqrt(2.0)));
    }
    CHECK(along_x.is_projective());

    CHECK_THROWS_AS(QubitDirection(Eigen::Vector3d::Zero()), domain_error);
}

TEST_CASE("element Bloch vectors are +-k and balance to zero") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::Vector3d k = random_direction(rng);
        const Rank1Povm povm = projective_from_direction(QubitDirection(k));
        const auto vectors = povm.bloch_vectors();
        CHECK((vectors[0] - k).norm() < 1e-12);
        CHECK((vectors[0] + vectors[1]).norm() < 1e-12);
    }
}

TEST_CASE("POVM validation") {
    VectorXcd e0(2), e1(2);
    e0 << 1, 0;
    e1 << 0, 1;
    SUBCASE("incomplete sets are rejected") {
        CHECK_THROWS_AS(Rank1Povm({PovmElement{1.0, e0}}), domain_error);
        CHECK_THROWS_AS(Rank1Povm({PovmElement{0.5, e0}, PovmElement{1.0, e1}}), domain_error);
    }
    SUBCASE("unnormalized kets are rejected") {
        VectorXcd big(2);
        big << 1.2, 0;
        CHECK_THROWS_AS(Rank1Povm({PovmElement{1.0, big}, PovmElement{1.0, e1}}), domain_error);
    }
    SUBCASE("kets are stored with a real positive leading amplitude") {
        VectorXcd rotated = e0 * Complex(0.0, 1.0);
        const Rank1Povm povm({PovmElement{1.0, rotated}, PovmElement{1.0, e1}});
        CHECK(povm[0].ket(0).real() == doctest::Approx(1.0));
        CHECK(povm[0].ket(0).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("conditional states") {
    Rng rng(32);
    SUBCASE("product states are unchanged") {
        const BipartiteState product = random_product(rng, 3, 2);
        const DensityMatrix rho_a = partial_trace(product, Subsystem::A);
        const Rank1Povm povm = random_rank1_povm(rng, 2, 3);
        for (const PovmElement& e : povm.elements()) {
            const auto outcome = conditional_state(product, e);
            REQUIRE(outcome.has_value());
            CHECK((outcome->state.matrix() - rho_a.matrix()).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
    SUBCASE("Bell state along z collapses A") {
        const auto outcome =
            conditional_state(bell_state(), projective_from_direction(QubitDirection::z())[0]);
        REQUIRE(outcome.has_value());
        CHECK(outcome->probability == doctest::Approx(0.5));
        CHECK(outcome->state.matrix()(0, 0).real() == doctest::Approx(1.0));
    }
    SUBCASE("pointer elements recover classical conditionals") {
        const DensityMatrix rho0 = random_density(rng, 2);
        const DensityMatrix rho1 = random_density(rng, 2);
        const BipartiteState state = classically_correlated({0.3, 0.7}, {rho0, rho1}, 2);
        const Rank1Povm pointer = computational_povm(2);
        const auto first = conditional_state(state, pointer[0]);
        REQUIRE(first.has_value());
        CHECK(first->probability == doctest::Approx(0.3));
        CHECK((first->state.matrix() - rho0.matrix()).cwiseAbs().maxCoeff() < 1e-11);
    }
    SUBCASE("unreachable outcomes are reported as null") {
        VectorXcd zero_ket(4);
        zero_ket << 1, 0, 0, 0;  // |00>
        const BipartiteState state(2, 2, DensityMatrix::pure(zero_ket));
        const Rank1Povm along_z = projective_from_direction(QubitDirection::z());
        CHECK_FALSE(conditional_state(state, along_z[1]).has_value());
    }
}

TEST_CASE("coarse graining") {
    Rng rng(33);
    const Rank1Povm fine = random_rank1_povm(rng, 2, 3);
    SUBCASE("identity mixing reproduces the elements") {
        const auto same = refine(fine, Eigen::MatrixXd::Identity(3, 3));
        for (int j = 0; j < 3; ++j) {
            CHECK((same[j] - fine[j].op()).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    SUBCASE("merging two elements keeps completeness") {
        Eigen::MatrixXd merge(2, 3);
        merge << 1, 1, 0, 0, 0, 1;
        const auto coarse = refine(fine, merge);
        CHECK(coarse.size() == 2);
        MatrixXcd sum = coarse[0] + coarse[1];
        CHECK((sum - MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("non-stochastic mixing is rejected") {
        Eigen::MatrixXd bad(2, 3);
        bad << 0.5, 1, 0, 0.2, 0, 1;
        CHECK_THROWS_AS(refine(fine, bad), domain_error);
    }
}

TEST_CASE("unread measurements") {
    Rng rng(34);
    SUBCASE("pointer basis leaves classical states unchanged") {
        const BipartiteState state =
            classically_correlated({0.6, 0.4}, {random_density(rng, 2), random_density(rng, 2)}, 2);
        const DensityMatrix after = unread_measurement_state(state, computational_povm(2));
        CHECK((after.matrix() - state.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("Bell state dephases in the z basis") {
        const DensityMatrix after =
            unread_measurement_state(bell_state(), projective_from_direction(QubitDirection::z()));
        MatrixXcd expected = MatrixXcd::Zero(4, 4);
        expected(0, 0) = expected(3, 3) = 0.5;
        CHECK((after.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("a basis commuting with rho_B leaves a product state unchanged") {
        const DensityMatrix rho_a = random_density(rng, 2);
        const DensityMatrix rho_b = random_density(rng, 2);
        const BipartiteState product(
            2, 2, DensityMatrix(Eigen::kroneckerProduct(rho_a.matrix(), rho_b.matrix())));
        std::vector<PovmElement> eigenbasis;
        for (int k = 0; k < 2; ++k) {
            eigenbasis.push_back(PovmElement{1.0, rho_b.eigenvectors().col(k)});
        }
        const DensityMatrix after =
            unread_measurement_state(product, Rank1Povm(std::move(eigenbasis)));
        CHECK((after.matrix() - product.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("non-projective POVMs are refused") {
        const Rank1Povm trine = random_rank1_povm(rng, 2, 3);
        CHECK_THROWS_AS(unread_measurement_state(bell_state(), trine),
                        unsupported_measurement_error);
    }
}

}  // TEST_SUITE
