#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "gcdm/domain.hpp"

namespace gcdm {

/* Geometry of the three-state weight simplex.

   A mixed state of a domain is a convex combination of the three sector
   ground states with weights (w_minus, w_zero, w_plus) for N-q, N, N+q.
   Fixing the mean electron count to N + nu pins w_plus - w_minus = nu/q,
   so the admissible states form a triangle in the plane

       (x, w_zero) = (nu/q, omega_N),

   with vertices (0,1) pure neutral, (1,0) pure anion, (-1,0) pure cation,
   and closed form

       w_(+,-) = (1 +- x - w_zero) / 2.

   The edge gamma+ (where w_minus = 0) and the edge gamma- (where
   w_plus = 0) are the two-state ground lines. On the horizontal line at
   height w_zero they sit at the reference fractions nu0 = +-q (1 - w_zero),
   and every state on that line is reached by sliding nu from 0 to nu0:

       w_plus = (nu + |nu0|) / 2q,  w_minus = (|nu0| - nu) / 2q.
*/

// Charge transferred onto the domain, in electron units, signed: positive
// means electrons accepted, negative means electrons donated. |nu| <= q.
struct ChargeFraction {
    ChargeFraction(double nu, int q);

    double nu;
    int q;
};

// Abscissa of a two-state ground line at a fixed height, signed like the
// edge it names: positive for gamma+, negative for gamma-. |nu0| <= q.
struct ReferenceFraction {
    ReferenceFraction(double nu0, int q);

    double nu0;
    int q;
};

enum class Side { Acceptor, Donor };

// Weights of the three sector ground states. Built through checked() or the
// functions below, the components lie in [0, 1] and sum to 1 within 1e-12.
struct WeightVector {
    double w_minus = 0.0;  // weight of the N-q sector
    double w_zero = 1.0;   // weight of the N sector
    double w_plus = 0.0;   // weight of the N+q sector

    // Validates bounds and normalization. Components within 1e-12 outside
    // [0, 1] are snapped onto the boundary before the checks.
    static WeightVector checked(double w_minus, double w_zero, double w_plus);

    double sum() const { return w_minus + w_zero + w_plus; }
};

struct SimplexPoint {
    double x = 0.0;       // nu / q
    double w_zero = 1.0;  // omega_N
};

enum class Region {
    InteriorAcceptor,  // open region between the neutral axis and gamma+
    InteriorDonor,     // open region between gamma- and the neutral axis
    EdgeAcceptor,      // gamma+, vertices excluded
    EdgeDonor,         // gamma-, vertices excluded
    NeutralAxis,       // x = 0, endpoints excluded
    VertexNeutral,     // (0, 1)
    VertexAnion,       // (1, 0)
    VertexCation,      // (-1, 0)
    Origin,            // (0, 0)
    Outside,
};

std::string_view to_string(Region region);

// A domain together with an admissible weight vector.
struct MixedState {
    DomainSpec domain;
    WeightVector weights;

    // Sector labels paired with their weights, ascending in electron count.
    std::array<std::pair<int, double>, 3> sectors() const;
};

// Tolerance for algebraic identities between weight vectors.
inline constexpr double kWeightTol = 1e-12;

// Half-width of the band that classify() assigns to edges and vertices.
inline constexpr double kRegionTol = 1e-9;

// Weights on the vertical line through x with the neutral weight given.
// Throws OutsideSimplexError when the point lies outside the triangle.
WeightVector weights_from_omega_n(double x, double w_zero);

// Reference fraction of the ground line on the requested side at height
// w_zero: nu0 = +-q (1 - w_zero).
ReferenceFraction reference_fraction(double w_zero, Side side, int q);

// Weights on the horizontal line through nu0 at charge fraction nu.
// Requires |nu| <= |nu0| and, for nonzero nu, matching signs.
WeightVector weights_from_reference(const ChargeFraction& nu,
                                    const ReferenceFraction& nu0);

// Region of a point, resolved with an absolute tolerance band: vertices
// take precedence over edges, edges over the axis, the axis over the
// interiors. Points on the bottom edge between two vertices belong to the
// interior region of their side.
Region classify(const SimplexPoint& point, double tol = kRegionTol);

// Bundles a validated weight vector with its domain.
MixedState assemble_state(const DomainSpec& domain, const WeightVector& weights);

// Mean electron count sum_M M w_M = N + nu.
double mean_particle_number(const DomainSpec& domain, const WeightVector& weights);

}  // namespace gcdm
