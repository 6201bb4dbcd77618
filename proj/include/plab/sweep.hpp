#pragma once

#include <string>
#include <vector>

namespace plab {

/// One row of ratio constants per (theta, C) configuration. The oscc column
/// uses the reference cost family "linear at half the floor": f(y) = y*L/2
/// with L = 1, U = theta, for which alpha = 1 + ln((U - L/2)/(L - L/2)).
struct SweepRow {
    double theta;
    int capacity;
    double alpha_static;
    double alpha_dynamic_c;
    double alpha_oap;
    double alpha_oscc_example;
};

std::vector<SweepRow> ratio_table(const std::vector<double>& thetas,
                                  const std::vector<int>& capacities);

/// Header, bit-exact: theta,C,alpha_static,alpha_dynamic_C,alpha_oap,alpha_oscc_example
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Shortest round-trip decimal form of a double (the library-wide number
/// format for CSV output).
std::string format_double(double v);

}  // namespace plab
