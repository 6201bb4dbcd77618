#include "plab/sweep.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "plab/ratios.hpp"

namespace plab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<SweepRow> ratio_table(const std::vector<double>& thetas,
                                  const std::vector<int>& capacities) {
    std::vector<SweepRow> rows;
    for (double theta : thetas) {
        if (theta < 1.0) throw std::domain_error("ratio_table: theta must be >= 1");
        for (int c : capacities) {
            SweepRow row{};
            row.theta = theta;
            row.capacity = c;
            row.alpha_static = 1.0 + std::log(theta);
            row.alpha_dynamic_c = solve_finite_supply_ratio(c, theta).alpha;
            row.alpha_oap = solve_assignment_ratio(std::max(theta, 1.0 + 1e-12)).alpha;
            row.alpha_oscc_example =
                theta == 1.0 ? 1.0 : 1.0 + std::log((theta - 0.5) / 0.5);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "theta,C,alpha_static,alpha_dynamic_C,alpha_oap,alpha_oscc_example\n";
    for (const auto& r : rows) {
        out += format_double(r.theta);
        out += ',';
        out += std::to_string(r.capacity);
        out += ',';
        out += format_double(r.alpha_static);
        out += ',';
        out += format_double(r.alpha_dynamic_c);
        out += ',';
        out += format_double(r.alpha_oap);
        out += ',';
        out += format_double(r.alpha_oscc_example);
        out += '\n';
    }
    return out;
}

}  // namespace plab
