#pragma once

#include <string>

#include "gcdm/errors.hpp"

namespace gcdm {

// A molecular domain embedded in an electron reservoir. The domain holds
// N electrons when neutral and exchanges charge in steps of q electrons,
// so the accessible sectors are N-q, N, N+q with the ground-state energies
// stored here. Energies carry whatever unit the catalog used; everything
// derived from them scales linearly with that unit.
//
// Invariants: n_electrons >= 1, 1 <= q <= n_electrons, all energies finite,
// e_cation - e_neutral > 0.
struct DomainSpec {
    DomainSpec(std::string label, int n_electrons, int q, double e_neutral,
               double e_anion, double e_cation);

    std::string label;
    int n_electrons;
    int q;
    double e_neutral;  // ground-state energy of the N-electron sector
    double e_anion;    // ground-state energy of the (N+q)-electron sector
    double e_cation;   // ground-state energy of the (N-q)-electron sector

    // q-step ionization energy, strictly positive by construction.
    double ionization() const { return e_cation - e_neutral; }

    // q-step electron affinity; may take either sign.
    double affinity() const { return e_neutral - e_anion; }
};

}  // namespace gcdm
