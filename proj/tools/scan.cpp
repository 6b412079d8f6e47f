#include "cli.hpp"

#include <cmath>
#include <stdexcept>

#include "gcdm/descriptors.hpp"
#include "gcdm/format.hpp"

namespace gcdm::cli {

std::vector<ScanRow> scan_rows(const DomainSpec& domain, int grid) {
    if (grid < 2 || grid > 1000) {
        throw std::invalid_argument("scan grid must lie in [2, 1000]");
    }
    const double qd = static_cast<double>(domain.q);
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(grid + 1) *
                 static_cast<std::size_t>(grid + 1));
    for (int j = 0; j <= grid; ++j) {
        const double w_zero = static_cast<double>(j) / grid;
        for (int i = 0; i <= grid; ++i) {
            const double x = static_cast<double>(2 * i - grid) / grid;
            ScanRow row{x, w_zero, classify(SimplexPoint{x, w_zero}),
                        {}, {}, {}, {}};
            if (row.region != Region::Outside) {
                const WeightVector w = weights_from_omega_n(x, w_zero);
                row.w_minus = w.w_minus;
                row.w_plus = w.w_plus;
                row.energy = energy(domain, w);
                if (row.region == Region::InteriorAcceptor ||
                    row.region == Region::InteriorDonor ||
                    row.region == Region::NeutralAxis) {
                    const double side = x < 0.0 ? -1.0 : 1.0;
                    const double a = qd * (1.0 - w_zero);
                    row.delta_h = delta_h(domain, ChargeFraction(x * qd, domain.q),
                                          ReferenceFraction(side * a, domain.q));
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string scan_csv(const DomainSpec& domain, int grid) {
    const std::vector<ScanRow> rows = scan_rows(domain, grid);
    std::string out = "x,omega_n,w_minus,w_plus,region,energy,delta_h\n";
    const auto cell = [](const std::optional<double>& value) {
        return value ? to_shortest(*value) : std::string();
    };
    for (const ScanRow& row : rows) {
        out += to_shortest(row.x);
        out.push_back(',');
        out += to_shortest(row.w_zero);
        out.push_back(',');
        out += cell(row.w_minus);
        out.push_back(',');
        out += cell(row.w_plus);
        out.push_back(',');
        out += to_string(row.region);
        out.push_back(',');
        out += cell(row.energy);
        out.push_back(',');
        out += cell(row.delta_h);
        out.push_back('\n');
    }
    return out;
}

}  // namespace gcdm::cli
