#pragma once

#include <stdexcept>

namespace plab {

/// Valuation support [L, U]. theta = U/L is stored exactly as the quotient
/// of the stored endpoints and drives every competitive ratio in the library.
struct Bounds {
    double L = 1.0;
    double U = 1.0;
    double theta = 1.0;

    static Bounds of(double lower, double upper) {
        if (!(lower > 0.0) || !(upper >= lower))
            throw std::domain_error("Bounds: need 0 < L <= U");
        return Bounds{lower, upper, upper / lower};
    }
};

}  // namespace plab
