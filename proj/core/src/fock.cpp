#include "gcdm/fock.hpp"

#include <cmath>
#include <string>

namespace gcdm {

FockSpaceSpec::FockSpaceSpec(std::vector<SectorSpec> sectors_)
    : sectors(std::move(sectors_)) {
    if (sectors.empty()) {
        throw std::invalid_argument("model space needs at least one sector");
    }
    int previous = -1;
    for (const SectorSpec& sector : sectors) {
        if (sector.particle_count < 0) {
            throw std::invalid_argument("sector particle count " +
                                        std::to_string(sector.particle_count) +
                                        " is negative");
        }
        if (sector.particle_count <= previous) {
            throw std::invalid_argument(
                "sector particle counts must strictly increase");
        }
        if (sector.dimension < 1) {
            throw std::invalid_argument("sector dimension must be >= 1");
        }
        if (!std::isfinite(sector.ground_energy)) {
            throw std::invalid_argument("sector ground energy must be finite");
        }
        previous = sector.particle_count;
    }
}

FockSpaceSpec FockSpaceSpec::for_domain(const DomainSpec& domain,
                                        int dimension) {
    return FockSpaceSpec(
        {{domain.n_electrons - domain.q, dimension, domain.e_cation},
         {domain.n_electrons, dimension, domain.e_neutral},
         {domain.n_electrons + domain.q, dimension, domain.e_anion}});
}

int FockSpaceSpec::total_dimension() const {
    int total = 0;
    for (const SectorSpec& sector : sectors) total += sector.dimension;
    return total;
}

int FockSpaceSpec::sector_offset(std::size_t index) const {
    int offset = 0;
    for (std::size_t i = 0; i < index; ++i) offset += sectors[i].dimension;
    return offset;
}

Operators build_operators(const FockSpaceSpec& space) {
    const int n = space.total_dimension();
    Eigen::MatrixXd hamiltonian = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd number_op = Eigen::MatrixXd::Zero(n, n);
    int offset = 0;
    for (const SectorSpec& sector : space.sectors) {
        for (int k = 0; k < sector.dimension; ++k) {
            hamiltonian(offset + k, offset + k) =
                sector.ground_energy + static_cast<double>(k);
            number_op(offset + k, offset + k) =
                static_cast<double>(sector.particle_count);
        }
        offset += sector.dimension;
    }
    return Operators{std::move(hamiltonian), std::move(number_op)};
}

EnsembleState build_ensemble(
    const FockSpaceSpec& space,
    const std::vector<std::pair<int, double>>& weights) {
    double sum = 0.0;
    for (const auto& [count, weight] : weights) {
        if (!(weight >= 0.0)) {
            throw WeightSumError("ensemble weight " + std::to_string(weight) +
                                 " for sector " + std::to_string(count) +
                                 " is negative");
        }
        sum += weight;
    }
    if (!(std::fabs(sum - 1.0) <= 1e-12)) {
        throw WeightSumError("ensemble weights sum to " + std::to_string(sum) +
                             " instead of 1");
    }
    const int n = space.total_dimension();
    Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [count, weight] : weights) {
        bool found = false;
        for (std::size_t i = 0; i < space.sectors.size(); ++i) {
            if (space.sectors[i].particle_count == count) {
                const int ground = space.sector_offset(i);
                matrix(ground, ground) += weight;
                found = true;
                break;
            }
        }
        if (!found) {
            throw UnknownSectorError("no sector with particle count " +
                                     std::to_string(count) +
                                     " in the model space");
        }
    }
    return EnsembleState{space, std::move(matrix)};
}

double trace_observable(const EnsembleState& state,
                        const Eigen::MatrixXd& observable) {
    const Eigen::MatrixXd& density = state.matrix;
    if (observable.rows() != density.rows() ||
        observable.cols() != density.cols()) {
        throw DimensionMismatchError(
            "observable is " + std::to_string(observable.rows()) + "x" +
            std::to_string(observable.cols()) + " but the model space is " +
            std::to_string(density.rows()) + "-dimensional");
    }
    // tr(O D) = sum_ij O_ij D_ji, avoiding the full matrix product.
    return observable.cwiseProduct(density.transpose()).sum();
}

double purity(const EnsembleState& state) {
    return state.matrix.cwiseProduct(state.matrix.transpose()).sum();
}

StateDiagnostics diagnose(const EnsembleState& state) {
    const Eigen::MatrixXd& density = state.matrix;
    StateDiagnostics diag;
    diag.hermiticity_error =
        (density - density.transpose()).cwiseAbs().maxCoeff();
    diag.trace_error = std::fabs(density.trace() - 1.0);
    const Eigen::MatrixXd symmetric =
        0.5 * (density + density.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        symmetric, Eigen::EigenvaluesOnly);
    diag.min_eigenvalue = solver.eigenvalues().minCoeff();
    diag.max_off_block = 0.0;
    for (std::size_t i = 0; i < state.space.sectors.size(); ++i) {
        const int row_begin = state.space.sector_offset(i);
        const int rows = state.space.sectors[i].dimension;
        for (std::size_t j = 0; j < state.space.sectors.size(); ++j) {
            if (i == j) continue;
            const int col_begin = state.space.sector_offset(j);
            const int cols = state.space.sectors[j].dimension;
            const double block_max = density.block(row_begin, col_begin,
                                                   rows, cols)
                                         .cwiseAbs()
                                         .maxCoeff();
            diag.max_off_block = std::max(diag.max_off_block, block_max);
        }
    }
    return diag;
}

}  // namespace gcdm
