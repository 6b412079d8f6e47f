#include "gcdm/simplex.hpp"

#include <cmath>
#include <string>

namespace gcdm {

namespace {

// Snaps values a hair outside [0, 1] onto the boundary.
double clamp_unit(double w) {
    if (w < 0.0 && w >= -kWeightTol) return 0.0;
    if (w > 1.0 && w <= 1.0 + kWeightTol) return 1.0;
    return w;
}

std::string pair_str(double x, double w_zero) {
    return "(" + std::to_string(x) + ", " + std::to_string(w_zero) + ")";
}

}  // namespace

ChargeFraction::ChargeFraction(double nu_, int q_) : nu(nu_), q(q_) {
    if (q < 1) {
        throw std::invalid_argument("charge fraction: q must be >= 1");
    }
    if (!(std::fabs(nu) <= static_cast<double>(q))) {
        throw OutsideSimplexError("charge fraction nu = " + std::to_string(nu) +
                                  " exceeds the charge step q = " +
                                  std::to_string(q));
    }
}

ReferenceFraction::ReferenceFraction(double nu0_, int q_) : nu0(nu0_), q(q_) {
    if (q < 1) {
        throw std::invalid_argument("reference fraction: q must be >= 1");
    }
    if (!(std::fabs(nu0) <= static_cast<double>(q))) {
        throw OutsideSimplexError("reference fraction nu0 = " +
                                  std::to_string(nu0) +
                                  " exceeds the charge step q = " +
                                  std::to_string(q));
    }
}

WeightVector WeightVector::checked(double w_minus, double w_zero,
                                   double w_plus) {
    w_minus = clamp_unit(w_minus);
    w_zero = clamp_unit(w_zero);
    w_plus = clamp_unit(w_plus);
    if (!(w_minus >= 0.0 && w_minus <= 1.0) ||
        !(w_zero >= 0.0 && w_zero <= 1.0) ||
        !(w_plus >= 0.0 && w_plus <= 1.0)) {
        throw OutsideSimplexError(
            "weight component outside [0, 1]: (" + std::to_string(w_minus) +
            ", " + std::to_string(w_zero) + ", " + std::to_string(w_plus) +
            ")");
    }
    const double sum = w_minus + w_zero + w_plus;
    if (!(std::fabs(sum - 1.0) <= kWeightTol)) {
        throw WeightSumError("weights sum to " + std::to_string(sum) +
                             " instead of 1");
    }
    WeightVector w;
    w.w_minus = w_minus;
    w.w_zero = w_zero;
    w.w_plus = w_plus;
    return w;
}

std::string_view to_string(Region region) {
    switch (region) {
        case Region::InteriorAcceptor: return "InteriorAcceptor";
        case Region::InteriorDonor: return "InteriorDonor";
        case Region::EdgeAcceptor: return "EdgeAcceptor";
        case Region::EdgeDonor: return "EdgeDonor";
        case Region::NeutralAxis: return "NeutralAxis";
        case Region::VertexNeutral: return "VertexNeutral";
        case Region::VertexAnion: return "VertexAnion";
        case Region::VertexCation: return "VertexCation";
        case Region::Origin: return "Origin";
        case Region::Outside: return "Outside";
    }
    return "Outside";
}

std::array<std::pair<int, double>, 3> MixedState::sectors() const {
    return {{{domain.n_electrons - domain.q, weights.w_minus},
             {domain.n_electrons, weights.w_zero},
             {domain.n_electrons + domain.q, weights.w_plus}}};
}

WeightVector weights_from_omega_n(double x, double w_zero) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw OutsideSimplexError("nu/q = " + std::to_string(x) +
                                  " lies outside [-1, 1]");
    }
    if (!(w_zero >= 0.0 && w_zero <= 1.0)) {
        throw OutsideSimplexError("omega_N = " + std::to_string(w_zero) +
                                  " lies outside [0, 1]");
    }
    const double w_minus = 0.5 * (1.0 - x - w_zero);
    const double w_plus = 0.5 * (1.0 + x - w_zero);
    if (w_minus < -kWeightTol || w_plus < -kWeightTol) {
        throw OutsideSimplexError("point " + pair_str(x, w_zero) +
                                  " lies above the weight triangle");
    }
    return WeightVector::checked(w_minus, w_zero, w_plus);
}

ReferenceFraction reference_fraction(double w_zero, Side side, int q) {
    if (q < 1) {
        throw std::invalid_argument("reference fraction: q must be >= 1");
    }
    if (!(w_zero >= 0.0 && w_zero <= 1.0)) {
        throw OutsideSimplexError("omega_N = " + std::to_string(w_zero) +
                                  " lies outside [0, 1]");
    }
    const double magnitude = static_cast<double>(q) * (1.0 - w_zero);
    if (magnitude == 0.0) return ReferenceFraction(0.0, q);
    return ReferenceFraction(side == Side::Acceptor ? magnitude : -magnitude,
                             q);
}

WeightVector weights_from_reference(const ChargeFraction& nu,
                                    const ReferenceFraction& nu0) {
    if (nu.q != nu0.q) {
        throw InconsistentReferenceError(
            "charge fraction uses q = " + std::to_string(nu.q) +
            " but reference fraction uses q = " + std::to_string(nu0.q));
    }
    const double v = nu.nu;
    const double a = std::fabs(nu0.nu0);
    if (std::fabs(v) > a) {
        throw InconsistentReferenceError(
            "|nu| = " + std::to_string(std::fabs(v)) +
            " exceeds the ground-line fraction |nu0| = " + std::to_string(a));
    }
    if (v != 0.0 && nu0.nu0 != 0.0 &&
        std::signbit(v) != std::signbit(nu0.nu0)) {
        throw SignMismatchError("nu = " + std::to_string(v) +
                                " lies on the opposite side of the neutral "
                                "axis from nu0 = " +
                                std::to_string(nu0.nu0));
    }
    const double two_q = 2.0 * static_cast<double>(nu.q);
    const double w_plus = (v + a) / two_q;
    const double w_minus = (a - v) / two_q;
    const double w_zero = 1.0 - a / static_cast<double>(nu.q);
    return WeightVector::checked(w_minus, w_zero, w_plus);
}

Region classify(const SimplexPoint& point, double tol) {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("classify: tol must be >= 0");
    }
    const double x = point.x;
    const double w = point.w_zero;
    if (std::isnan(x) || std::isnan(w)) return Region::Outside;
    const double ax = std::fabs(x);
    if (ax > 1.0 + tol || w < -tol || w > 1.0 + tol) return Region::Outside;
    if (w > 1.0 - ax + tol) return Region::Outside;
    const bool on_axis = ax <= tol;
    if (on_axis && std::fabs(w - 1.0) <= tol) return Region::VertexNeutral;
    if (std::fabs(x - 1.0) <= tol && w <= tol) return Region::VertexAnion;
    if (std::fabs(x + 1.0) <= tol && w <= tol) return Region::VertexCation;
    if (on_axis && w <= tol) return Region::Origin;
    if (x > 0.0 && std::fabs(w - (1.0 - x)) <= tol) return Region::EdgeAcceptor;
    if (x < 0.0 && std::fabs(w - (1.0 + x)) <= tol) return Region::EdgeDonor;
    if (on_axis) return Region::NeutralAxis;
    return x > 0.0 ? Region::InteriorAcceptor : Region::InteriorDonor;
}

MixedState assemble_state(const DomainSpec& domain, const WeightVector& weights) {
    return MixedState{domain, WeightVector::checked(weights.w_minus,
                                                    weights.w_zero,
                                                    weights.w_plus)};
}

double mean_particle_number(const DomainSpec& domain,
                            const WeightVector& weights) {
    const double n = static_cast<double>(domain.n_electrons);
    const double q = static_cast<double>(domain.q);
    return (n - q) * weights.w_minus + n * weights.w_zero +
           (n + q) * weights.w_plus;
}

}  // namespace gcdm
