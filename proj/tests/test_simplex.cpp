#include <cmath>

#include <doctest.h>

#include "gcdm/random.hpp"
#include "gcdm/simplex.hpp"
#include "helpers.hpp"

using namespace gcdm;

namespace {
doctest::Approx tight(double value) {
    return doctest::Approx(value).epsilon(1e-12);
}
}  // namespace

TEST_CASE("column construction reproduces the closed-form weights") {
    const WeightVector w = weights_from_omega_n(0.5, 0.4);
    CHECK(w.w_minus == tight(0.05));
    CHECK(w.w_zero == tight(0.4));
    CHECK(w.w_plus == tight(0.55));
    CHECK(w.sum() == tight(1.0));
}

TEST_CASE("column construction rejects points outside the triangle") {
    CHECK_THROWS_AS(weights_from_omega_n(0.8, 0.5), OutsideSimplexError);
    CHECK_THROWS_AS(weights_from_omega_n(1.2, 0.0), OutsideSimplexError);
    CHECK_THROWS_AS(weights_from_omega_n(0.0, -0.1), OutsideSimplexError);
    CHECK_THROWS_AS(weights_from_omega_n(0.0, 1.1), OutsideSimplexError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(weights_from_omega_n(nan, 0.5), OutsideSimplexError);
}

TEST_CASE("vertices come out exact") {
    const WeightVector top = weights_from_omega_n(0.0, 1.0);
    CHECK(top.w_minus == 0.0);
    CHECK(top.w_zero == 1.0);
    CHECK(top.w_plus == 0.0);
    const WeightVector anion = weights_from_omega_n(1.0, 0.0);
    CHECK(anion.w_plus == 1.0);
    CHECK(anion.w_minus == 0.0);
    const WeightVector cation = weights_from_omega_n(-1.0, 0.0);
    CHECK(cation.w_minus == 1.0);
    CHECK(cation.w_plus == 0.0);
}

TEST_CASE("components a hair outside the unit interval snap to it") {
    const WeightVector w = weights_from_omega_n(0.5, 0.5 + 1e-13);
    CHECK(w.w_minus == 0.0);
    CHECK(w.w_plus > 0.0);
}

TEST_CASE("line construction matches the frozen values") {
    const WeightVector inner = weights_from_reference(
        ChargeFraction(0.5, 1), ReferenceFraction(0.6, 1));
    CHECK(inner.w_minus == tight(0.05));
    CHECK(inner.w_zero == tight(0.4));
    CHECK(inner.w_plus == tight(0.55));

    const WeightVector ground = weights_from_reference(
        ChargeFraction(0.6, 1), ReferenceFraction(0.6, 1));
    CHECK(ground.w_minus == 0.0);
    CHECK(ground.w_zero == tight(0.4));
    CHECK(ground.w_plus == tight(0.6));

    const WeightVector axis = weights_from_reference(
        ChargeFraction(0.0, 1), ReferenceFraction(0.6, 1));
    CHECK(axis.w_minus == tight(0.3));
    CHECK(axis.w_zero == tight(0.4));
    CHECK(axis.w_plus == tight(0.3));
}

TEST_CASE("line construction rejects inconsistent fractions") {
    CHECK_THROWS_AS(weights_from_reference(ChargeFraction(0.7, 1),
                                           ReferenceFraction(0.6, 1)),
                    InconsistentReferenceError);
    CHECK_THROWS_AS(weights_from_reference(ChargeFraction(0.3, 1),
                                           ReferenceFraction(-0.6, 1)),
                    SignMismatchError);
    CHECK_THROWS_AS(weights_from_reference(ChargeFraction(-0.3, 1),
                                           ReferenceFraction(0.6, 1)),
                    SignMismatchError);
    CHECK_THROWS_AS(weights_from_reference(ChargeFraction(0.3, 1),
                                           ReferenceFraction(0.6, 2)),
                    InconsistentReferenceError);
    CHECK_THROWS_AS(weights_from_reference(ChargeFraction(0.1, 1),
                                           ReferenceFraction(0.0, 1)),
                    InconsistentReferenceError);
}

TEST_CASE("fraction types validate their magnitudes") {
    CHECK_THROWS_AS(ChargeFraction(1.5, 1), OutsideSimplexError);
    CHECK_THROWS_AS(ReferenceFraction(-2.5, 2), OutsideSimplexError);
    CHECK_THROWS_AS(ChargeFraction(0.5, 0), std::invalid_argument);
    CHECK_NOTHROW(ChargeFraction(2.0, 2));
}

TEST_CASE("reference fractions sit on the requested edge") {
    CHECK(reference_fraction(0.4, Side::Acceptor, 2).nu0 == tight(1.2));
    CHECK(reference_fraction(0.4, Side::Donor, 2).nu0 == tight(-1.2));
    CHECK(reference_fraction(1.0, Side::Acceptor, 3).nu0 == 0.0);
    CHECK(reference_fraction(1.0, Side::Donor, 3).nu0 == 0.0);
    CHECK(reference_fraction(0.0, Side::Acceptor, 1).nu0 == 1.0);
    CHECK_THROWS_AS(reference_fraction(-0.2, Side::Acceptor, 1),
                    OutsideSimplexError);
    CHECK_THROWS_AS(reference_fraction(0.5, Side::Acceptor, 0),
                    std::invalid_argument);
}

TEST_CASE("classification of the frozen point table") {
    CHECK(classify({0.0, 1.0}) == Region::VertexNeutral);
    CHECK(classify({1.0, 0.0}) == Region::VertexAnion);
    CHECK(classify({-1.0, 0.0}) == Region::VertexCation);
    CHECK(classify({0.0, 0.0}) == Region::Origin);
    CHECK(classify({0.3, 0.7}) == Region::EdgeAcceptor);
    CHECK(classify({-0.3, 0.7}) == Region::EdgeDonor);
    CHECK(classify({0.0, 0.5}) == Region::NeutralAxis);
    CHECK(classify({0.3, 0.4}) == Region::InteriorAcceptor);
    CHECK(classify({-0.3, 0.4}) == Region::InteriorDonor);
    CHECK(classify({0.5, 0.6}) == Region::Outside);
    CHECK(classify({1.2, 0.0}) == Region::Outside);
    CHECK(classify({0.0, -0.2}) == Region::Outside);
}

TEST_CASE("points on the bottom edge between vertices are interior") {
    CHECK(classify({0.5, 0.0}) == Region::InteriorAcceptor);
    CHECK(classify({-0.5, 0.0}) == Region::InteriorDonor);
}

TEST_CASE("classification uses an absolute tolerance band") {
    CHECK(classify({1e-10, 0.5}) == Region::NeutralAxis);
    CHECK(classify({0.5, 0.5 + 5e-10}) == Region::EdgeAcceptor);
    CHECK(classify({1.0 + 5e-10, 0.0}) == Region::VertexAnion);
    CHECK(classify({0.0, 1.0 + 5e-10}) == Region::VertexNeutral);
    CHECK(classify({0.5, 0.5 + 5e-9}) == Region::Outside);
    CHECK(classify({1e-6, 0.5}, 1e-5) == Region::NeutralAxis);
    CHECK(classify({std::nan(""), 0.5}) == Region::Outside);
    CHECK_THROWS_AS(classify({0.0, 0.5}, -1.0), std::invalid_argument);
}

TEST_CASE("mean particle number interpolates between the sectors") {
    const DomainSpec d = testutil::demo_a();
    CHECK(mean_particle_number(d, weights_from_omega_n(0.5, 0.4)) ==
          tight(6.5));
    CHECK(mean_particle_number(d, weights_from_omega_n(0.0, 1.0)) == 6.0);
    CHECK(mean_particle_number(d, weights_from_omega_n(1.0, 0.0)) == 7.0);
    CHECK(mean_particle_number(d, weights_from_omega_n(-1.0, 0.0)) == 5.0);
}

TEST_CASE("assembled states expose the sector mapping") {
    const DomainSpec d = testutil::demo_a();
    const MixedState state =
        assemble_state(d, weights_from_omega_n(0.5, 0.4));
    const auto sectors = state.sectors();
    CHECK(sectors[0].first == 5);
    CHECK(sectors[0].second == tight(0.05));
    CHECK(sectors[1].first == 6);
    CHECK(sectors[1].second == tight(0.4));
    CHECK(sectors[2].first == 7);
    CHECK(sectors[2].second == tight(0.55));
}

TEST_CASE("weight vectors reject bad sums and components") {
    CHECK_THROWS_AS(WeightVector::checked(0.5, 0.6, 0.5), WeightSumError);
    CHECK_THROWS_AS(WeightVector::checked(-0.1, 0.6, 0.5),
                    OutsideSimplexError);
    CHECK_THROWS_AS(WeightVector::checked(0.2, 1.3, -0.5),
                    OutsideSimplexError);
}

TEST_CASE("random interior points satisfy the simplex identities") {
    Rng rng(911);
    for (int k = 0; k < 200; ++k) {
        const double x = rng.uniform(-0.999, 0.999);
        const double w_zero = 0.999 * rng.uniform() * (1.0 - std::fabs(x));
        const WeightVector w = weights_from_omega_n(x, w_zero);
        CHECK(std::fabs(w.sum() - 1.0) <= 1e-12);
        CHECK(std::fabs((w.w_plus - w.w_minus) - x) <= 1e-12);
        CHECK(w.w_minus >= 0.0);
        CHECK(w.w_plus <= 1.0);

        const int q = 1 + k % 3;
        const double qd = static_cast<double>(q);
        const double side = x < 0.0 ? -1.0 : 1.0;
        const double a = qd * (1.0 - w_zero);
        const WeightVector via_line = weights_from_reference(
            ChargeFraction(x * qd, q), ReferenceFraction(side * a, q));
        CHECK(std::fabs(via_line.w_minus - w.w_minus) <= 1e-12);
        CHECK(std::fabs(via_line.w_zero - w.w_zero) <= 1e-12);
        CHECK(std::fabs(via_line.w_plus - w.w_plus) <= 1e-12);
    }
}
