#pragma once

#include <vector>

#include "gcdm/simplex.hpp"

namespace gcdm {

/* Energy model over the weight simplex.

   The ensemble energy is linear in the weights,

       E = w_minus E(N-q) + w_zero E(N) + w_plus E(N+q),

   so its variation across the triangle is captured by two combinations of
   the q-step ionization energy I and electron affinity A:

       mu0  = -(A + I) / 2    horizontal slope  dE/dnu  = mu0 / q
       eta0 =  (I - A) / 2    vertical slope    dE/dnu0 = +-eta0 / q

   with the upper sign on the acceptor side and the lower on the donor
   side. For mu0 < 0 the energy decreases monotonically from the donor
   ground line gamma- to the acceptor ground line gamma+.
*/

// Energy-derived descriptors of one domain.
struct DescriptorSet {
    double i_q;    // q-step ionization energy, strictly positive
    double a_q;    // q-step electron affinity
    double mu0;    // -(a_q + i_q) / 2
    double eta0;   // (i_q - a_q) / 2
    double e_bar;  // (e_anion + e_cation) / 2

    // Set when |a_q| >= i_q; the three sector energies then fail to form
    // a convex sequence and eta0 loses its meaning as a stability gap.
    bool convexity_warning;
};

// A simplex point with its weights and ensemble energy.
struct EnergyPoint {
    SimplexPoint point;
    WeightVector weights;
    double energy;
};

DescriptorSet descriptor_set(const DomainSpec& domain);

// Ensemble energy of a weight vector.
double energy(const DomainSpec& domain, const WeightVector& weights);

// Weights and energy at a simplex point given as (nu/q, omega_N).
EnergyPoint energy_point(const DomainSpec& domain, const SimplexPoint& point);

// Energy of the two-state ground state at reference fraction nu0.
double edge_energy(const DomainSpec& domain, const ReferenceFraction& nu0);

// Promotion energy of the interior state at nu on the line through nu0,
// measured from that line's ground state and oriented so that it is
// nonnegative on both sides when mu0 < 0. Zero exactly at nu = nu0.
double delta_h(const DomainSpec& domain, const ChargeFraction& nu,
               const ReferenceFraction& nu0);

// Relaxation energy for moving the state at fixed nu from the line through
// nu0 to the line through nu0_prime. Requires |nu| <= |nu0_prime| <= |nu0|
// and matching sides; nonpositive whenever eta0 > 0.
double delta_u(const DomainSpec& domain, const ChargeFraction& nu,
               const ReferenceFraction& nu0, const ReferenceFraction& nu0_prime);

// Energies sampled at `samples` evenly spaced charge fractions spanning the
// horizontal line at height w_zero, from the donor end to the acceptor end.
// Strictly decreasing when mu0 < 0. Requires w_zero in (0, 1], samples >= 2.
std::vector<double> energy_trend(const DomainSpec& domain, double w_zero,
                                 int samples);

struct SlopePair {
    double d_e_d_nu;   // central difference of E along nu
    double d_e_d_nu0;  // central difference of E along the signed nu0
};

// Finite-difference energy slopes at an interior point. step <= 0 selects
// the default 1e-5 * q. Throws BoundaryTooCloseError unless the stencil
// fits strictly inside the triangle. Points on the neutral axis use the
// acceptor-side reference.
SlopePair energy_slopes(const DomainSpec& domain, const SimplexPoint& point,
                        double step = 0.0);

}  // namespace gcdm
