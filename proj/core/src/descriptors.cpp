#include "gcdm/descriptors.hpp"

#include <cmath>
#include <string>

namespace gcdm {

namespace {

void require_same_q(const DomainSpec& domain, int q) {
    if (q != domain.q) {
        throw InconsistentReferenceError(
            "fraction uses q = " + std::to_string(q) + " but domain '" +
            domain.label + "' has q = " + std::to_string(domain.q));
    }
}

// Energy on the horizontal line whose ground-line fraction has magnitude
// nu0_mag, at charge fraction nu. The reference side is taken from nu, so
// the sign consistency of weights_from_reference always holds.
double line_energy(const DomainSpec& domain, double nu, double nu0_mag) {
    const double side = nu < 0.0 ? -1.0 : 1.0;
    return energy(domain,
                  weights_from_reference(ChargeFraction(nu, domain.q),
                                         ReferenceFraction(side * nu0_mag,
                                                           domain.q)));
}

}  // namespace

DescriptorSet descriptor_set(const DomainSpec& domain) {
    const double i_q = domain.ionization();
    const double a_q = domain.affinity();
    DescriptorSet d;
    d.i_q = i_q;
    d.a_q = a_q;
    d.mu0 = -(a_q + i_q) / 2.0;
    d.eta0 = (i_q - a_q) / 2.0;
    d.e_bar = (domain.e_anion + domain.e_cation) / 2.0;
    d.convexity_warning = std::fabs(a_q) >= i_q;
    return d;
}

double energy(const DomainSpec& domain, const WeightVector& weights) {
    return weights.w_minus * domain.e_cation +
           weights.w_zero * domain.e_neutral +
           weights.w_plus * domain.e_anion;
}

EnergyPoint energy_point(const DomainSpec& domain, const SimplexPoint& point) {
    const WeightVector w = weights_from_omega_n(point.x, point.w_zero);
    return EnergyPoint{point, w, energy(domain, w)};
}

double edge_energy(const DomainSpec& domain, const ReferenceFraction& nu0) {
    require_same_q(domain, nu0.q);
    return energy(domain,
                  weights_from_reference(ChargeFraction(nu0.nu0, nu0.q), nu0));
}

double delta_h(const DomainSpec& domain, const ChargeFraction& nu,
               const ReferenceFraction& nu0) {
    require_same_q(domain, nu.q);
    require_same_q(domain, nu0.q);
    const double interior = energy(domain, weights_from_reference(nu, nu0));
    const double edge = edge_energy(domain, nu0);
    return nu0.nu0 < 0.0 ? edge - interior : interior - edge;
}

double delta_u(const DomainSpec& domain, const ChargeFraction& nu,
               const ReferenceFraction& nu0,
               const ReferenceFraction& nu0_prime) {
    require_same_q(domain, nu.q);
    require_same_q(domain, nu0.q);
    require_same_q(domain, nu0_prime.q);
    if (nu0.nu0 != 0.0 && nu0_prime.nu0 != 0.0 &&
        std::signbit(nu0.nu0) != std::signbit(nu0_prime.nu0)) {
        throw SideMismatchError("reference fractions " +
                                std::to_string(nu0.nu0) + " and " +
                                std::to_string(nu0_prime.nu0) +
                                " lie on opposite sides of the neutral axis");
    }
    if (std::fabs(nu0_prime.nu0) > std::fabs(nu0.nu0)) {
        throw InconsistentReferenceError(
            "|nu0'| = " + std::to_string(std::fabs(nu0_prime.nu0)) +
            " exceeds |nu0| = " + std::to_string(std::fabs(nu0.nu0)));
    }
    const double relaxed = energy(domain, weights_from_reference(nu, nu0_prime));
    const double base = energy(domain, weights_from_reference(nu, nu0));
    return relaxed - base;
}

std::vector<double> energy_trend(const DomainSpec& domain, double w_zero,
                                 int samples) {
    if (samples < 2) {
        throw std::invalid_argument("energy_trend: need at least two samples");
    }
    if (!(w_zero > 0.0 && w_zero <= 1.0)) {
        throw OutsideSimplexError("energy_trend: omega_N = " +
                                  std::to_string(w_zero) +
                                  " lies outside (0, 1]");
    }
    const double limit = static_cast<double>(domain.q) * (1.0 - w_zero);
    std::vector<double> energies;
    energies.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double nu = -limit + 2.0 * limit * t;
        energies.push_back(line_energy(domain, nu, limit));
    }
    return energies;
}

SlopePair energy_slopes(const DomainSpec& domain, const SimplexPoint& point,
                        double step) {
    const double q = static_cast<double>(domain.q);
    const double h = step > 0.0 ? step : 1e-5 * q;
    const double nu = point.x * q;
    const double nu0_mag = q * (1.0 - point.w_zero);
    const double margin = std::min(nu0_mag - std::fabs(nu), q - nu0_mag);
    if (!(margin > h)) {
        throw BoundaryTooCloseError(
            "slope stencil of half-width " + std::to_string(h) +
            " does not fit at (" + std::to_string(point.x) + ", " +
            std::to_string(point.w_zero) + "); margin = " +
            std::to_string(margin));
    }
    const double side = point.x < 0.0 ? -1.0 : 1.0;
    const double d_nu = (line_energy(domain, nu + h, nu0_mag) -
                         line_energy(domain, nu - h, nu0_mag)) /
                        (2.0 * h);
    // The signed reference is side * nu0_mag; shifting it by +-h shifts the
    // magnitude by +-side * h.
    const double d_nu0 = (line_energy(domain, nu, nu0_mag + side * h) -
                          line_energy(domain, nu, nu0_mag - side * h)) /
                         (2.0 * h);
    return SlopePair{d_nu, d_nu0};
}

}  // namespace gcdm
