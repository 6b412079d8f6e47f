#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcdm/catalog.hpp"
#include "gcdm/simplex.hpp"

namespace gcdm::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerifyFailed = 3;

// One row of a simplex scan. Cells stay empty where a quantity is not
// defined: weights and energy outside the triangle, the promotion energy
// everywhere except interior and neutral-axis points.
struct ScanRow {
    double x;
    double w_zero;
    Region region;
    std::optional<double> w_minus;
    std::optional<double> w_plus;
    std::optional<double> energy;
    std::optional<double> delta_h;
};

// Rows of the (grid+1)^2 lattice over [-1, 1] x [0, 1], w_zero ascending
// and x ascending within each line. grid must lie in [2, 1000].
std::vector<ScanRow> scan_rows(const DomainSpec& domain, int grid);

// CSV document for scan_rows with the column order
// x,omega_n,w_minus,w_plus,region,energy,delta_h and numbers in shortest
// round-trip form, so the bytes are stable run to run.
std::string scan_csv(const DomainSpec& domain, int grid);

// Runs the command line against the given streams; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gcdm::cli
