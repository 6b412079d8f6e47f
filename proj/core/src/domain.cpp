#include "gcdm/domain.hpp"

#include <cmath>
#include <utility>

namespace gcdm {

DomainSpec::DomainSpec(std::string label_, int n_electrons_, int q_,
                       double e_neutral_, double e_anion_, double e_cation_)
    : label(std::move(label_)),
      n_electrons(n_electrons_),
      q(q_),
      e_neutral(e_neutral_),
      e_anion(e_anion_),
      e_cation(e_cation_) {
    if (n_electrons < 1) {
        throw std::invalid_argument("domain '" + label +
                                    "': n_electrons must be >= 1");
    }
    if (q < 1) {
        throw std::invalid_argument("domain '" + label + "': q must be >= 1");
    }
    if (q > n_electrons) {
        throw ElectronCountUnderflowError(
            "domain '" + label + "': removing q=" + std::to_string(q) +
            " electrons from N=" + std::to_string(n_electrons) +
            " leaves a negative electron count");
    }
    if (!std::isfinite(e_neutral) || !std::isfinite(e_anion) ||
        !std::isfinite(e_cation)) {
        throw std::invalid_argument("domain '" + label +
                                    "': sector energies must be finite");
    }
    if (!(ionization() > 0.0)) {
        throw NonPositiveIonizationError(
            "domain '" + label + "': ionization energy " +
            std::to_string(ionization()) + " is not strictly positive");
    }
}

}  // namespace gcdm
