#pragma once

#include <stdexcept>

namespace plab {

// Library-wide root tolerance: bracket width 1e-13 or 200 iterations,
// whichever comes first. width = 0 runs to floating-point saturation
// (the bracket can no longer shrink), still under the iteration cap.
struct BisectOptions {
    double width = 1e-13;
    int max_iter = 200;
};

// Bracketed bisection; f must change sign over [lo, hi]. Returns the
// midpoint of the final bracket.
template <class F>
double bisect(F&& f, double lo, double hi, BisectOptions opt = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::domain_error("bisect: no sign change over bracket");
    const bool rising = flo < 0.0;
    for (int it = 0; it < opt.max_iter && hi - lo > opt.width; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // saturated
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == rising)
            lo = mid;
        else
            hi = mid;
    }
    return lo + 0.5 * (hi - lo);
}

}  // namespace plab
