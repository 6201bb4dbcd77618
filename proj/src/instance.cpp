#include "plab/instance.hpp"

#include <stdexcept>
#include <string>

namespace plab {

namespace {

void check_in_bounds(double v, const Bounds& b, std::size_t n, const char* what) {
    if (v < b.L || v > b.U)
        throw std::invalid_argument(std::string(what) + ": valuation " + std::to_string(v) +
                                    " of buyer " + std::to_string(n) + " outside [L, U]");
}

}  // namespace

void OspInstance::validate() const {
    if (capacity < 1) throw std::invalid_argument("OspInstance: capacity must be >= 1");
    for (std::size_t n = 0; n < valuations.size(); ++n)
        check_in_bounds(valuations[n], bounds, n, "OspInstance");
}

void OapInstance::validate() const {
    const std::size_t k = capacities.size();
    if (k == 0) throw std::invalid_argument("OapInstance: need at least one item");
    if (bounds.size() != k)
        throw std::invalid_argument("OapInstance: bounds/capacities size mismatch");
    for (int c : capacities)
        if (c < 1) throw std::invalid_argument("OapInstance: capacities must be >= 1");
    for (std::size_t n = 0; n < valuations.size(); ++n) {
        if (valuations[n].size() != k)
            throw std::invalid_argument("OapInstance: buyer " + std::to_string(n) +
                                        " has wrong valuation-vector length");
        for (std::size_t j = 0; j < k; ++j) {
            const double v = valuations[n][j];
            if (v == 0.0) continue;  // not interested
            check_in_bounds(v, bounds[j], n, "OapInstance");
        }
    }
}

void OsccInstance::validate() const {
    for (std::size_t n = 0; n < valuations.size(); ++n)
        check_in_bounds(valuations[n], bounds, n, "OsccInstance");
}

}  // namespace plab
