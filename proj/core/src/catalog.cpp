#include "gcdm/catalog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "gcdm/format.hpp"

namespace gcdm {

namespace {

constexpr std::array<std::string_view, 10> kColumns = {
    "label", "n_electrons", "q",   "mode", "e_neutral",
    "e_anion", "e_cation",  "i_q", "a_q",  "units"};

std::string record_ref(const SpeciesRecord& record, std::size_t index) {
    if (!record.label.empty()) return "record '" + record.label + "'";
    return "record " + std::to_string(index + 1);
}

EnergyMode parse_mode(const std::string& text, const std::string& where) {
    if (text == "absolute") return EnergyMode::Absolute;
    if (text == "descriptor") return EnergyMode::Descriptor;
    throw ParseError(where + ": unknown energy mode '" + text + "'");
}

void require_finite(const std::optional<double>& value, const char* field,
                    const std::string& where) {
    if (value && !std::isfinite(*value)) {
        throw ParseError(where + ": " + field + " must be finite");
    }
}

void validate_record(const SpeciesRecord& record, std::size_t index) {
    const std::string where = record_ref(record, index);
    if (record.label.empty()) {
        throw MissingFieldError("record " + std::to_string(index + 1) +
                                ": label must not be empty");
    }
    if (record.n_electrons < 1) {
        throw ParseError(where + ": n_electrons must be >= 1");
    }
    if (record.q < 1) {
        throw ParseError(where + ": q must be >= 1");
    }
    if (!std::isfinite(record.e_neutral)) {
        throw ParseError(where + ": e_neutral must be finite");
    }
    require_finite(record.e_anion, "e_anion", where);
    require_finite(record.e_cation, "e_cation", where);
    require_finite(record.i_q, "i_q", where);
    require_finite(record.a_q, "a_q", where);
    if (record.mode == EnergyMode::Absolute) {
        if (!record.e_anion) {
            throw MissingFieldError(where + ": absolute mode needs e_anion");
        }
        if (!record.e_cation) {
            throw MissingFieldError(where + ": absolute mode needs e_cation");
        }
        if (record.i_q || record.a_q) {
            throw ModeConflictError(where +
                                    ": absolute mode forbids i_q and a_q");
        }
    } else {
        if (!record.i_q) {
            throw MissingFieldError(where + ": descriptor mode needs i_q");
        }
        if (!record.a_q) {
            throw MissingFieldError(where + ": descriptor mode needs a_q");
        }
        if (record.e_anion || record.e_cation) {
            throw ModeConflictError(
                where + ": descriptor mode forbids e_anion and e_cation");
        }
    }
}

void validate_records(std::span<const SpeciesRecord> records) {
    std::unordered_set<std::string> labels;
    for (std::size_t i = 0; i < records.size(); ++i) {
        validate_record(records[i], i);
        if (!labels.insert(records[i].label).second) {
            throw DuplicateLabelError("duplicate label '" + records[i].label +
                                      "'");
        }
    }
}

double parse_double_cell(const std::string& cell, std::string_view column,
                         std::size_t row) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError("row " + std::to_string(row) + ": cell '" + cell +
                         "' in column " + std::string(column) +
                         " is not a number");
    }
    return value;
}

int parse_int_cell(const std::string& cell, std::string_view column,
                   std::size_t row) {
    int value = 0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError("row " + std::to_string(row) + ": cell '" + cell +
                         "' in column " + std::string(column) +
                         " is not an integer");
    }
    return value;
}

// Splits CSV text into rows of cells. Cells starting with a quote follow
// the doubling convention; CRLF and LF both end a row.
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    bool in_quotes = false;
    bool cell_started = false;

    const auto end_cell = [&] {
        row.push_back(std::move(cell));
        cell.clear();
        cell_started = false;
    };
    const auto end_row = [&] {
        end_cell();
        rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cell.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!cell.empty() || cell_started) {
                    throw ParseError("row " + std::to_string(rows.size() + 1) +
                                     ": quote inside an unquoted cell");
                }
                in_quotes = true;
                cell_started = true;
                break;
            case ',':
                end_cell();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') {
                    end_row();
                    ++i;
                } else {
                    cell.push_back(c);
                }
                break;
            case '\n':
                end_row();
                break;
            default:
                cell.push_back(c);
                cell_started = true;
        }
    }
    if (in_quotes) {
        throw ParseError("unterminated quoted cell at end of document");
    }
    if (!cell.empty() || cell_started || !row.empty()) {
        end_row();
    }
    return rows;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (const char c : cell) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

std::vector<SpeciesRecord> parse_csv(std::string_view text) {
    const auto rows = split_csv(text);
    if (rows.empty()) {
        throw ParseError("empty catalog document");
    }
    const std::vector<std::string> expected_header(kColumns.begin(),
                                                   kColumns.end());
    if (rows.front() != expected_header) {
        throw ParseError("header row does not match the catalog columns");
    }
    std::vector<SpeciesRecord> records;
    records.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        if (cells.size() != kColumns.size()) {
            throw ParseError("row " + std::to_string(r + 1) + ": expected " +
                             std::to_string(kColumns.size()) +
                             " cells, found " + std::to_string(cells.size()));
        }
        SpeciesRecord record;
        record.label = cells[0];
        record.n_electrons = parse_int_cell(cells[1], kColumns[1], r + 1);
        record.q = parse_int_cell(cells[2], kColumns[2], r + 1);
        record.mode = parse_mode(cells[3], "row " + std::to_string(r + 1));
        if (cells[4].empty()) {
            throw MissingFieldError("row " + std::to_string(r + 1) +
                                    ": e_neutral must not be empty");
        }
        record.e_neutral = parse_double_cell(cells[4], kColumns[4], r + 1);
        const auto optional_cell =
            [&](const std::string& cell,
                std::string_view column) -> std::optional<double> {
            if (cell.empty()) return std::nullopt;
            return parse_double_cell(cell, column, r + 1);
        };
        record.e_anion = optional_cell(cells[5], kColumns[5]);
        record.e_cation = optional_cell(cells[6], kColumns[6]);
        record.i_q = optional_cell(cells[7], kColumns[7]);
        record.a_q = optional_cell(cells[8], kColumns[8]);
        record.units = cells[9];
        records.push_back(std::move(record));
    }
    return records;
}

std::string write_csv(std::span<const SpeciesRecord> records) {
    std::string out;
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += kColumns[i];
    }
    out.push_back('\n');
    const auto number_cell = [](const std::optional<double>& value) {
        return value ? to_shortest(*value) : std::string();
    };
    for (const SpeciesRecord& record : records) {
        out += csv_escape(record.label);
        out.push_back(',');
        out += std::to_string(record.n_electrons);
        out.push_back(',');
        out += std::to_string(record.q);
        out.push_back(',');
        out += to_string(record.mode);
        out.push_back(',');
        out += to_shortest(record.e_neutral);
        out.push_back(',');
        out += number_cell(record.e_anion);
        out.push_back(',');
        out += number_cell(record.e_cation);
        out.push_back(',');
        out += number_cell(record.i_q);
        out.push_back(',');
        out += number_cell(record.a_q);
        out.push_back(',');
        out += csv_escape(record.units);
        out.push_back('\n');
    }
    return out;
}

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double json_number(const json& value, std::string_view key,
                   const std::string& where) {
    if (!value.is_number()) {
        throw ParseError(where + ": " + std::string(key) +
                         " must be a number");
    }
    return value.get<double>();
}

std::vector<SpeciesRecord> parse_json(std::string_view text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!document.is_object()) {
        throw ParseError("top-level JSON value must be an object");
    }
    for (const auto& [key, value] : document.items()) {
        if (key != "species") {
            throw ParseError("unknown top-level key '" + key + "'");
        }
    }
    if (!document.contains("species")) {
        throw MissingFieldError("document has no 'species' array");
    }
    const json& species = document["species"];
    if (!species.is_array()) {
        throw ParseError("'species' must be an array");
    }
    std::vector<SpeciesRecord> records;
    records.reserve(species.size());
    for (std::size_t i = 0; i < species.size(); ++i) {
        const json& item = species[i];
        const std::string where = "species[" + std::to_string(i) + "]";
        if (!item.is_object()) {
            throw ParseError(where + " must be an object");
        }
        SpeciesRecord record;
        bool has_mode = false;
        for (const auto& [key, value] : item.items()) {
            if (key == "label") {
                if (!value.is_string()) {
                    throw ParseError(where + ": label must be a string");
                }
                record.label = value.get<std::string>();
            } else if (key == "n_electrons") {
                if (!value.is_number_integer()) {
                    throw ParseError(where +
                                     ": n_electrons must be an integer");
                }
                record.n_electrons = value.get<int>();
            } else if (key == "q") {
                if (!value.is_number_integer()) {
                    throw ParseError(where + ": q must be an integer");
                }
                record.q = value.get<int>();
            } else if (key == "mode") {
                if (!value.is_string()) {
                    throw ParseError(where + ": mode must be a string");
                }
                record.mode = parse_mode(value.get<std::string>(), where);
                has_mode = true;
            } else if (key == "e_neutral") {
                record.e_neutral = json_number(value, key, where);
            } else if (key == "e_anion") {
                record.e_anion = json_number(value, key, where);
            } else if (key == "e_cation") {
                record.e_cation = json_number(value, key, where);
            } else if (key == "i_q") {
                record.i_q = json_number(value, key, where);
            } else if (key == "a_q") {
                record.a_q = json_number(value, key, where);
            } else if (key == "units") {
                if (!value.is_string()) {
                    throw ParseError(where + ": units must be a string");
                }
                record.units = value.get<std::string>();
            } else {
                throw ParseError(where + ": unknown key '" + key + "'");
            }
        }
        if (!item.contains("label")) {
            throw MissingFieldError(where + " has no label");
        }
        if (!item.contains("n_electrons")) {
            throw MissingFieldError(where + " has no n_electrons");
        }
        if (!item.contains("e_neutral")) {
            throw MissingFieldError(where + " has no e_neutral");
        }
        if (!has_mode) {
            throw MissingFieldError(where + " has no mode");
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string write_json(std::span<const SpeciesRecord> records) {
    ordered_json species = ordered_json::array();
    for (const SpeciesRecord& record : records) {
        ordered_json item;
        item["label"] = record.label;
        item["n_electrons"] = record.n_electrons;
        item["q"] = record.q;
        item["mode"] = to_string(record.mode);
        item["e_neutral"] = record.e_neutral;
        if (record.e_anion) item["e_anion"] = *record.e_anion;
        if (record.e_cation) item["e_cation"] = *record.e_cation;
        if (record.i_q) item["i_q"] = *record.i_q;
        if (record.a_q) item["a_q"] = *record.a_q;
        item["units"] = record.units;
        species.push_back(std::move(item));
    }
    ordered_json document;
    document["species"] = std::move(species);
    return document.dump(2) + "\n";
}

}  // namespace

std::string_view to_string(EnergyMode mode) {
    return mode == EnergyMode::Absolute ? "absolute" : "descriptor";
}

std::vector<SpeciesRecord> parse_catalog(std::string_view text,
                                         CatalogFormat format) {
    std::vector<SpeciesRecord> records = format == CatalogFormat::Json
                                             ? parse_json(text)
                                             : parse_csv(text);
    validate_records(records);
    return records;
}

std::string write_catalog(std::span<const SpeciesRecord> records,
                          CatalogFormat format) {
    validate_records(records);
    return format == CatalogFormat::Json ? write_json(records)
                                         : write_csv(records);
}

DomainSpec to_domain(const SpeciesRecord& record) {
    validate_record(record, 0);
    if (record.mode == EnergyMode::Absolute) {
        return DomainSpec(record.label, record.n_electrons, record.q,
                          record.e_neutral, *record.e_anion, *record.e_cation);
    }
    return DomainSpec(record.label, record.n_electrons, record.q,
                      record.e_neutral, record.e_neutral - *record.a_q,
                      record.e_neutral + *record.i_q);
}

}  // namespace gcdm
