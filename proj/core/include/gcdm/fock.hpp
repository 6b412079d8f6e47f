#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gcdm/domain.hpp"

namespace gcdm {

/* Explicit matrix realization of the three-sector ensemble.

   The model Fock space is a direct sum of particle-number sectors. Each
   sector contributes `dimension` basis states: the ground state first,
   then filler excitations whose diagonal energies sit strictly above the
   ground energy. Observables built here are block-diagonal, and every
   ensemble average must be independent of the filler dimension.
*/

struct SectorSpec {
    int particle_count;
    int dimension;
    double ground_energy;
};

// Ordered sector list; particle counts strictly increase.
struct FockSpaceSpec {
    explicit FockSpaceSpec(std::vector<SectorSpec> sectors);

    // The three sectors N-q, N, N+q of a domain, each `dimension` wide.
    static FockSpaceSpec for_domain(const DomainSpec& domain, int dimension = 1);

    std::vector<SectorSpec> sectors;

    int total_dimension() const;

    // First basis index of the sector at `index` in the sector list.
    int sector_offset(std::size_t index) const;
};

struct Operators {
    Eigen::MatrixXd hamiltonian;  // diagonal; ground energies then fillers
    Eigen::MatrixXd number_op;    // particle count, constant per block
};

Operators build_operators(const FockSpaceSpec& space);

// A density operator on the model space, block-diagonal by construction.
struct EnsembleState {
    FockSpaceSpec space;
    Eigen::MatrixXd matrix;
};

// Density operator sum_M w_M |ground_M><ground_M| from (particle count,
// weight) pairs. Weights must be nonnegative and sum to 1 within 1e-12;
// every particle count must name a sector of the space.
EnsembleState build_ensemble(const FockSpaceSpec& space,
                             const std::vector<std::pair<int, double>>& weights);

// tr(observable * density); dimensions must match the state.
double trace_observable(const EnsembleState& state,
                        const Eigen::MatrixXd& observable);

// tr(density^2); 1 exactly for pure states, 1/n_sectors at equal mixing.
double purity(const EnsembleState& state);

// Numerical health of a density operator.
struct StateDiagnostics {
    double hermiticity_error;  // max |D - D^T|
    double trace_error;        // |tr D - 1|
    double min_eigenvalue;     // smallest eigenvalue of the symmetrized part
    double max_off_block;      // largest entry outside the sector blocks
};

StateDiagnostics diagnose(const EnsembleState& state);

}  // namespace gcdm
