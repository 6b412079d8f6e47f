#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "gcdm/descriptors.hpp"
#include "gcdm/verify.hpp"

namespace gcdm::cli {

namespace {

// Failure while reading, parsing, or resolving a catalog file.
struct CatalogLoadError : Error {
    using Error::Error;
};

// Failure while writing an output file.
struct IoError : Error {
    using Error::Error;
};

// The requested label is missing from an otherwise valid catalog.
struct UnknownLabelError : Error {
    using Error::Error;
};

std::string fixed6(double value) {
    if (value == 0.0) value = 0.0;  // print -0 as 0
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return std::string(buffer);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream contents;
    contents << in.rdbuf();
    if (in.bad()) {
        throw ParseError("cannot read '" + path + "'");
    }
    return std::move(contents).str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp + "' for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("cannot write '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move '" + tmp + "' to '" + path + "'");
    }
}

CatalogFormat detect_format(const std::string& path,
                            const std::string& forced) {
    if (forced == "json") return CatalogFormat::Json;
    if (forced == "csv") return CatalogFormat::Csv;
    if (path.size() >= 5 && path.ends_with(".json")) return CatalogFormat::Json;
    if (path.size() >= 4 && path.ends_with(".csv")) return CatalogFormat::Csv;
    throw ParseError("cannot infer the catalog format of '" + path +
                     "'; pass --format json or --format csv");
}

std::vector<SpeciesRecord> load_catalog(const std::string& path,
                                        const std::string& forced) {
    try {
        return parse_catalog(read_file(path), detect_format(path, forced));
    } catch (const Error& e) {
        throw CatalogLoadError(e.what());
    }
}

DomainSpec load_domain(const std::string& path, const std::string& forced,
                       const std::string& label) {
    const std::vector<SpeciesRecord> records = load_catalog(path, forced);
    for (const SpeciesRecord& record : records) {
        if (record.label != label) continue;
        try {
            return to_domain(record);
        } catch (const Error& e) {
            throw CatalogLoadError(e.what());
        }
    }
    throw UnknownLabelError("no species labelled '" + label + "' in '" +
                            path + "'");
}

std::vector<DomainSpec> load_all_domains(const std::string& path,
                                         const std::string& forced) {
    const std::vector<SpeciesRecord> records = load_catalog(path, forced);
    std::vector<DomainSpec> domains;
    domains.reserve(records.size());
    for (const SpeciesRecord& record : records) {
        try {
            domains.push_back(to_domain(record));
        } catch (const Error& e) {
            throw CatalogLoadError(e.what());
        }
    }
    return domains;
}

struct PointArgs {
    std::optional<double> x;
    std::optional<double> omega_n;
    std::optional<double> nu;
    std::optional<double> nu0;
};

void add_point_options(CLI::App* sub, PointArgs& point) {
    sub->add_option("--x", point.x, "abscissa nu/q of the state");
    sub->add_option("--omega-n", point.omega_n, "neutral-sector weight");
    sub->add_option("--nu", point.nu, "transferred charge, electron units");
    sub->add_option("--nu0", point.nu0,
                    "signed ground-line fraction of the same horizontal line");
}

// Coordinates of the requested point; the line route validates the
// fractions, the column route passes raw coordinates through.
SimplexPoint resolve_coordinates(const PointArgs& point, int q) {
    const bool column = point.x.has_value() || point.omega_n.has_value();
    const bool line = point.nu.has_value() || point.nu0.has_value();
    if (column == line) {
        throw std::invalid_argument(
            "give either --x with --omega-n or --nu with --nu0");
    }
    if (column) {
        if (!point.x || !point.omega_n) {
            throw std::invalid_argument("--x and --omega-n go together");
        }
        return SimplexPoint{*point.x, *point.omega_n};
    }
    if (!point.nu || !point.nu0) {
        throw std::invalid_argument("--nu and --nu0 go together");
    }
    const ChargeFraction nu(*point.nu, q);
    const ReferenceFraction nu0(*point.nu0, q);
    const double qd = static_cast<double>(q);
    return SimplexPoint{nu.nu / qd, 1.0 - std::fabs(nu0.nu0) / qd};
}

struct ResolvedPoint {
    WeightVector weights;
    SimplexPoint point;
};

ResolvedPoint resolve_state(const PointArgs& point, int q) {
    const bool column = point.x.has_value() || point.omega_n.has_value();
    const bool line = point.nu.has_value() || point.nu0.has_value();
    if (column == line) {
        throw std::invalid_argument(
            "give either --x with --omega-n or --nu with --nu0");
    }
    if (column) {
        if (!point.x || !point.omega_n) {
            throw std::invalid_argument("--x and --omega-n go together");
        }
        return ResolvedPoint{weights_from_omega_n(*point.x, *point.omega_n),
                             SimplexPoint{*point.x, *point.omega_n}};
    }
    if (!point.nu || !point.nu0) {
        throw std::invalid_argument("--nu and --nu0 go together");
    }
    const ChargeFraction nu(*point.nu, q);
    const ReferenceFraction nu0(*point.nu0, q);
    const double qd = static_cast<double>(q);
    return ResolvedPoint{weights_from_reference(nu, nu0),
                         SimplexPoint{nu.nu / qd,
                                      1.0 - std::fabs(nu0.nu0) / qd}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Three-state grand-canonical ensemble model of "
                 "fractionally charged molecular domains",
                 "gcdm"};
    app.require_subcommand(1);

    std::string domain_path;
    std::string label;
    std::string format;
    std::string output;
    int grid = 100;
    int q = 1;
    int synthetic = -1;
    std::uint64_t seed = 0;
    PointArgs point;

    const auto add_catalog_options = [&](CLI::App* sub, bool required) {
        auto* domain_opt = sub->add_option("--domain", domain_path,
                                           "catalog file (JSON or CSV)");
        auto* label_opt = sub->add_option("--label", label,
                                          "species label inside the catalog");
        if (required) {
            domain_opt->required();
            label_opt->required();
        }
        sub->add_option("--format", format,
                        "catalog format when the extension is ambiguous")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* weights_cmd = app.add_subcommand(
        "weights", "sector weights and region of one state");
    add_point_options(weights_cmd, point);
    weights_cmd->add_option("--q", q, "charge step for --nu/--nu0")
        ->check(CLI::PositiveNumber);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "region label of one point");
    add_point_options(classify_cmd, point);
    classify_cmd->add_option("--q", q, "charge step for --nu/--nu0")
        ->check(CLI::PositiveNumber);

    CLI::App* state_cmd = app.add_subcommand(
        "state", "full mixed-state summary for a catalog species");
    add_catalog_options(state_cmd, true);
    add_point_options(state_cmd, point);

    CLI::App* energy_cmd = app.add_subcommand(
        "energy", "ensemble energy of one state of a catalog species");
    add_catalog_options(energy_cmd, true);
    add_point_options(energy_cmd, point);

    CLI::App* descriptors_cmd = app.add_subcommand(
        "descriptors", "energy descriptors of a catalog species");
    add_catalog_options(descriptors_cmd, true);

    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "CSV scan of the whole simplex for a catalog species");
    add_catalog_options(scan_cmd, true);
    scan_cmd->add_option("--grid", grid, "grid subdivisions per axis")
        ->check(CLI::Range(2, 1000));
    scan_cmd->add_option("--output", output,
                         "output file; written atomically (default: stdout)");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the model invariant suite and print a report");
    add_catalog_options(verify_cmd, false);
    verify_cmd->add_option("--synthetic", synthetic,
                           "number of generated domains (default 20 when no "
                           "catalog is given, else 0)");
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (weights_cmd->parsed()) {
            const ResolvedPoint state = resolve_state(point, q);
            out << fixed6(state.weights.w_minus) << ' '
                << fixed6(state.weights.w_zero) << ' '
                << fixed6(state.weights.w_plus) << ' '
                << to_string(classify(state.point)) << "\n";
            return kExitOk;
        }
        if (classify_cmd->parsed()) {
            out << to_string(classify(resolve_coordinates(point, q))) << "\n";
            return kExitOk;
        }
        if (state_cmd->parsed()) {
            const DomainSpec domain = load_domain(domain_path, format, label);
            const ResolvedPoint resolved = resolve_state(point, domain.q);
            const MixedState state = assemble_state(domain, resolved.weights);
            out << "label " << domain.label << "\n";
            for (const auto& [count, weight] : state.sectors()) {
                out << "sector " << count << ' ' << fixed6(weight) << "\n";
            }
            const WeightVector& w = state.weights;
            out << "region " << to_string(classify(resolved.point)) << "\n";
            out << "mean_particle_number "
                << fixed6(mean_particle_number(domain, w)) << "\n";
            out << "purity "
                << fixed6(w.w_minus * w.w_minus + w.w_zero * w.w_zero +
                          w.w_plus * w.w_plus)
                << "\n";
            return kExitOk;
        }
        if (energy_cmd->parsed()) {
            const DomainSpec domain = load_domain(domain_path, format, label);
            const ResolvedPoint resolved = resolve_state(point, domain.q);
            out << fixed6(energy(domain, resolved.weights)) << "\n";
            return kExitOk;
        }
        if (descriptors_cmd->parsed()) {
            const DomainSpec domain = load_domain(domain_path, format, label);
            const DescriptorSet d = descriptor_set(domain);
            out << "I_q=" << fixed6(d.i_q) << " A_q=" << fixed6(d.a_q)
                << " mu0=" << fixed6(d.mu0) << " eta0=" << fixed6(d.eta0)
                << " Ebar=" << fixed6(d.e_bar) << "\n";
            if (d.convexity_warning) {
                err << "warning: domain '" << domain.label
                    << "': |A_q| >= I_q; the sector energies are not "
                       "strictly convex\n";
            }
            return kExitOk;
        }
        if (scan_cmd->parsed()) {
            const DomainSpec domain = load_domain(domain_path, format, label);
            const std::string csv = scan_csv(domain, grid);
            if (output.empty()) {
                out << csv;
            } else {
                write_file_atomic(output, csv);
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            std::vector<DomainSpec> catalog_domains;
            if (!domain_path.empty()) {
                catalog_domains = load_all_domains(domain_path, format);
            }
            VerifyOptions options;
            options.seed = seed;
            options.synthetic_count =
                synthetic >= 0 ? synthetic : (catalog_domains.empty() ? 20 : 0);
            const std::vector<CheckResult> results =
                run_verification(catalog_domains, options);
            print_report(out, options, catalog_domains.size(), results);
            return all_passed(results) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CatalogLoadError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UnknownLabelError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}

}  // namespace gcdm::cli
