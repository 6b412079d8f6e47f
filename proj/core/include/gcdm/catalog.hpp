#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcdm/domain.hpp"

namespace gcdm {

// How a catalog record encodes the ionic sector energies: either directly
// (absolute) or through the ionization energy and electron affinity
// relative to the neutral sector (descriptor).
enum class EnergyMode { Absolute, Descriptor };

enum class CatalogFormat { Json, Csv };

// One species in a catalog. Absolute records carry e_anion and e_cation;
// descriptor records carry i_q and a_q instead. units is an uninterpreted
// tag attached to every energy in the record.
struct SpeciesRecord {
    std::string label;
    int n_electrons = 0;
    int q = 1;
    EnergyMode mode = EnergyMode::Absolute;
    double e_neutral = 0.0;
    std::optional<double> e_anion;
    std::optional<double> e_cation;
    std::optional<double> i_q;
    std::optional<double> a_q;
    std::string units = "eV";
};

std::string_view to_string(EnergyMode mode);

// Parses a catalog document. JSON documents hold {"species": [...]};
// CSV documents start with the exact header
//   label,n_electrons,q,mode,e_neutral,e_anion,e_cation,i_q,a_q,units
// and leave cells a record's mode does not use empty. Records are fully
// validated: labels unique and nonempty, counts positive, exactly the
// fields of the declared mode present, all numbers finite.
std::vector<SpeciesRecord> parse_catalog(std::string_view text,
                                         CatalogFormat format);

// Serializes records after running the same validation as parse_catalog.
// Numbers are written in shortest round-trip form, so the output is
// byte-stable and parses back to identical records.
std::string write_catalog(std::span<const SpeciesRecord> records,
                          CatalogFormat format);

// Resolves a record into a domain. Descriptor records reconstruct the
// ionic energies as e_neutral - a_q and e_neutral + i_q.
DomainSpec to_domain(const SpeciesRecord& record);

}  // namespace gcdm
