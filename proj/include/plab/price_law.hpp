#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "plab/conjugate.hpp"

namespace plab {

/// One segment of an inverse-CDF price law. Segments are half-open [x_lo,
/// x_hi); the boundary point belongs to the segment on its right, and the
/// last segment additionally owns x = 1.
struct Segment {
    struct Constant {
        double price;
    };
    /// price(x) = scale * exp(rate * x), rate > 0
    struct ScaledExp {
        double scale;
        double rate;
    };
    /// price(x) = profit^{-1}(base * exp(alpha*x - 1)) through a conjugate
    /// profit curve; base is the profit at the floor price.
    struct ConjugateCurve {
        std::shared_ptr<const Conjugate> conjugate;
        double base;
        double alpha;
    };

    double x_lo;
    double x_hi;
    std::variant<Constant, ScaledExp, ConjugateCurve> form;
};

/// Monotone nondecreasing map psi from a uniform draw x in [0,1] to a posted
/// price, with its inverse cdf(v) = sup{x : psi(x) <= v}. Evaluation at
/// x = 1 returns the stored top price exactly, and all evaluations are
/// clamped to it, so monotonicity is not disturbed by round-off near the cap.
class PriceLaw {
public:
    PriceLaw(std::vector<Segment> segments, double alpha, double top_price);

    /// psi(x); domain error outside [0, 1]
    double price(double x) const;

    /// sup{x : psi(x) <= v}; 0 below psi(0), 1 above the top price.
    /// Inside a constant segment (an atom of the price distribution) this
    /// returns the atom's right endpoint.
    double cdf(double v) const;

    /// Integral of psi over [0, 1]; closed-form per segment, adaptive
    /// quadrature (1e-10 relative) where the conjugate form has none.
    double expected_price() const;

    /// Integral of psi over [a, b] within [0, 1].
    double integral(double a, double b) const;

    double alpha() const { return alpha_; }
    double top_price() const { return top_price_; }
    double bottom_price() const { return price(0.0); }
    const std::vector<Segment>& segments() const { return segments_; }

private:
    double raw_value(const Segment& s, double x) const;

    std::vector<Segment> segments_;
    double alpha_;
    double top_price_;
};

}  // namespace plab
