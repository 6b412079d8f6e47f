#include <cmath>
#include <vector>

#include <doctest.h>

#include "gcdm/descriptors.hpp"
#include "helpers.hpp"

using namespace gcdm;

namespace {
doctest::Approx tight(double value) {
    return doctest::Approx(value).epsilon(1e-12);
}
}  // namespace

TEST_CASE("descriptors of the demo domains") {
    const DescriptorSet a = descriptor_set(testutil::demo_a());
    CHECK(a.i_q == 10.0);
    CHECK(a.a_q == -1.0);
    CHECK(a.mu0 == -4.5);
    CHECK(a.eta0 == 5.5);
    CHECK(a.e_bar == -94.5);
    CHECK_FALSE(a.convexity_warning);

    const DescriptorSet sym = descriptor_set(testutil::demo_sym());
    CHECK(sym.i_q == 5.0);
    CHECK(sym.a_q == -5.0);
    CHECK(sym.mu0 == 0.0);
    CHECK(sym.eta0 == 5.0);
    CHECK(sym.convexity_warning);

    const DescriptorSet b = descriptor_set(testutil::demo_b());
    CHECK(b.i_q == 12.5);
    CHECK(b.a_q == 0.5);
    CHECK(b.mu0 == -6.5);
    CHECK(b.eta0 == 6.0);
    CHECK(b.e_bar == -114.0);
    CHECK_FALSE(b.convexity_warning);
}

TEST_CASE("domain construction rejects nonpositive ionization") {
    CHECK_THROWS_AS(DomainSpec("flat", 6, 1, -100.0, -99.0, -100.0),
                    NonPositiveIonizationError);
    CHECK_THROWS_AS(DomainSpec("inverted", 6, 1, -100.0, -99.0, -101.0),
                    NonPositiveIonizationError);
    CHECK_THROWS_AS(DomainSpec("underflow", 2, 3, -100.0, -99.0, -90.0),
                    ElectronCountUnderflowError);
    CHECK_THROWS_AS(DomainSpec("empty", 0, 1, -100.0, -99.0, -90.0),
                    std::invalid_argument);
}

TEST_CASE("ensemble energy at the frozen interior point") {
    const DomainSpec d = testutil::demo_a();
    const WeightVector w = weights_from_omega_n(0.5, 0.4);
    CHECK(energy(d, w) == tight(-98.95));
    const EnergyPoint p = energy_point(d, SimplexPoint{0.5, 0.4});
    CHECK(p.energy == tight(-98.95));
    CHECK(p.weights.w_plus == tight(0.55));
}

TEST_CASE("edge energies interpolate the two-state ground lines") {
    const DomainSpec d = testutil::demo_a();
    CHECK(edge_energy(d, ReferenceFraction(0.6, 1)) == tight(-99.4));
    CHECK(edge_energy(d, ReferenceFraction(-0.6, 1)) == tight(-94.0));
    CHECK(edge_energy(d, ReferenceFraction(1.0, 1)) == -99.0);
    CHECK(edge_energy(d, ReferenceFraction(-1.0, 1)) == -90.0);
    CHECK(edge_energy(d, ReferenceFraction(0.0, 1)) == -100.0);
    CHECK_THROWS_AS(edge_energy(d, ReferenceFraction(0.5, 2)),
                    InconsistentReferenceError);
}

TEST_CASE("promotion energy matches the frozen values and closed forms") {
    const DomainSpec d = testutil::demo_a();
    const DescriptorSet ds = descriptor_set(d);

    const double plus = delta_h(d, ChargeFraction(0.5, 1),
                                ReferenceFraction(0.6, 1));
    CHECK(plus == tight(0.45));
    CHECK(plus == tight(((0.5 - 0.6) / 1.0) * ds.mu0));
    CHECK(plus == tight(-((0.5 - 0.6) / 2.0) * (ds.a_q + ds.i_q)));

    const double minus = delta_h(d, ChargeFraction(-0.2, 1),
                                 ReferenceFraction(-0.6, 1));
    CHECK(minus == tight(1.8));
    CHECK(minus == tight(-((-0.2 + 0.6) / 1.0) * ds.mu0));

    CHECK(delta_h(d, ChargeFraction(0.6, 1), ReferenceFraction(0.6, 1)) ==
          0.0);
    CHECK(delta_h(d, ChargeFraction(-0.6, 1), ReferenceFraction(-0.6, 1)) ==
          0.0);
}

TEST_CASE("promotion energy rejects mismatched fractions") {
    const DomainSpec d = testutil::demo_a();
    CHECK_THROWS_AS(delta_h(d, ChargeFraction(0.7, 1),
                            ReferenceFraction(0.6, 1)),
                    InconsistentReferenceError);
    CHECK_THROWS_AS(delta_h(d, ChargeFraction(-0.2, 1),
                            ReferenceFraction(0.6, 1)),
                    SignMismatchError);
    CHECK_THROWS_AS(delta_h(d, ChargeFraction(0.2, 2),
                            ReferenceFraction(0.6, 2)),
                    InconsistentReferenceError);
}

TEST_CASE("relaxation energy matches the frozen values and closed form") {
    const DomainSpec d = testutil::demo_a();
    const DescriptorSet ds = descriptor_set(d);

    const double acceptor =
        delta_u(d, ChargeFraction(0.3, 1), ReferenceFraction(0.6, 1),
                ReferenceFraction(0.4, 1));
    CHECK(acceptor == tight(-1.1));
    CHECK(acceptor == tight(((0.4 - 0.6) / 1.0) * ds.eta0));

    const double donor =
        delta_u(d, ChargeFraction(-0.1, 1), ReferenceFraction(-0.5, 1),
                ReferenceFraction(-0.2, 1));
    CHECK(donor == tight(-1.65));
    CHECK(donor == tight(((0.2 - 0.5) / 1.0) * ds.eta0));

    const ReferenceFraction same(0.6, 1);
    CHECK(delta_u(d, ChargeFraction(0.3, 1), same, same) == 0.0);

    CHECK(ds.e_bar - d.e_neutral == tight(ds.eta0));
    CHECK(ds.e_bar > d.e_neutral);
}

TEST_CASE("relaxation energy rejects inconsistent reference pairs") {
    const DomainSpec d = testutil::demo_a();
    CHECK_THROWS_AS(delta_u(d, ChargeFraction(0.3, 1),
                            ReferenceFraction(0.4, 1),
                            ReferenceFraction(0.6, 1)),
                    InconsistentReferenceError);
    CHECK_THROWS_AS(delta_u(d, ChargeFraction(0.3, 1),
                            ReferenceFraction(0.6, 1),
                            ReferenceFraction(-0.4, 1)),
                    SideMismatchError);
    CHECK_THROWS_AS(delta_u(d, ChargeFraction(0.5, 1),
                            ReferenceFraction(0.6, 1),
                            ReferenceFraction(0.4, 1)),
                    InconsistentReferenceError);
}

TEST_CASE("energy trend along a line matches the frozen sequence") {
    const DomainSpec d = testutil::demo_a();
    const std::vector<double> energies = energy_trend(d, 0.4, 5);
    REQUIRE(energies.size() == 5);
    CHECK(energies[0] == tight(-94.0));
    CHECK(energies[1] == tight(-95.35));
    CHECK(energies[2] == tight(-96.7));
    CHECK(energies[3] == tight(-98.05));
    CHECK(energies[4] == tight(-99.4));
    for (std::size_t i = 1; i < energies.size(); ++i) {
        CHECK(energies[i] < energies[i - 1]);
    }
    CHECK(energies.front() == edge_energy(d, ReferenceFraction(-0.6, 1)));
    CHECK(energies.back() == edge_energy(d, ReferenceFraction(0.6, 1)));
}

TEST_CASE("energy trend is flat for a symmetric domain") {
    const DomainSpec d = testutil::demo_sym();
    const std::vector<double> energies = energy_trend(d, 0.4, 7);
    for (const double e : energies) {
        CHECK(e == tight(-47.0));
    }
}

TEST_CASE("energy trend validates its arguments") {
    const DomainSpec d = testutil::demo_a();
    CHECK_THROWS_AS(energy_trend(d, 0.4, 1), std::invalid_argument);
    CHECK_THROWS_AS(energy_trend(d, 0.0, 5), OutsideSimplexError);
    CHECK_THROWS_AS(energy_trend(d, 1.5, 5), OutsideSimplexError);
    const std::vector<double> collapsed = energy_trend(d, 1.0, 3);
    for (const double e : collapsed) {
        CHECK(e == -100.0);
    }
}

TEST_CASE("finite-difference slopes match the descriptors") {
    const DomainSpec d = testutil::demo_a();
    const SlopePair acceptor = energy_slopes(d, SimplexPoint{0.3, 0.4});
    CHECK(acceptor.d_e_d_nu == doctest::Approx(-4.5).epsilon(1e-6));
    CHECK(acceptor.d_e_d_nu0 == doctest::Approx(5.5).epsilon(1e-6));
    const SlopePair donor = energy_slopes(d, SimplexPoint{-0.3, 0.4});
    CHECK(donor.d_e_d_nu == doctest::Approx(-4.5).epsilon(1e-6));
    CHECK(donor.d_e_d_nu0 == doctest::Approx(-5.5).epsilon(1e-6));
}

TEST_CASE("slope stencils refuse to cross the boundary") {
    const DomainSpec d = testutil::demo_a();
    CHECK_THROWS_AS(energy_slopes(d, SimplexPoint{0.6 - 1e-6, 0.4}),
                    BoundaryTooCloseError);
    CHECK_THROWS_AS(energy_slopes(d, SimplexPoint{0.1, 1.0 - 1e-6}),
                    BoundaryTooCloseError);
    CHECK_THROWS_AS(energy_slopes(d, SimplexPoint{0.9, 0.3}),
                    BoundaryTooCloseError);
    CHECK_NOTHROW(energy_slopes(d, SimplexPoint{0.3, 0.4}, 1e-7));
}
