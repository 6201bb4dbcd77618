#include "plab/price_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plab {

namespace {

constexpr double kQuadRelTol = 1e-10;

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(F&& f, double a, double m, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(F&& f, double a, double b, double rel_tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(a, b, fa, fm, fb);
    const double scale = std::max(std::abs(whole), (b - a) * std::abs(fm));
    return adaptive_simpson(f, a, m, b, fa, fm, fb, whole, rel_tol * std::max(scale, 1e-300), 48);
}

}  // namespace

PriceLaw::PriceLaw(std::vector<Segment> segments, double alpha, double top_price)
    : segments_(std::move(segments)), alpha_(alpha), top_price_(top_price) {
    if (segments_.empty()) throw std::invalid_argument("PriceLaw: no segments");
    if (segments_.front().x_lo != 0.0 || segments_.back().x_hi != 1.0)
        throw std::invalid_argument("PriceLaw: segments must cover [0, 1]");
    for (std::size_t i = 1; i < segments_.size(); ++i)
        if (segments_[i].x_lo != segments_[i - 1].x_hi)
            throw std::invalid_argument("PriceLaw: segments must partition [0, 1]");
    if (!(bottom_price() > 0.0)) throw std::invalid_argument("PriceLaw: psi(0) must be positive");
}

double PriceLaw::raw_value(const Segment& s, double x) const {
    if (const auto* c = std::get_if<Segment::Constant>(&s.form)) return c->price;
    if (const auto* e = std::get_if<Segment::ScaledExp>(&s.form))
        return e->scale * std::exp(e->rate * x);
    const auto& cc = std::get<Segment::ConjugateCurve>(s.form);
    return cc.conjugate->inverse(cc.base * std::exp(cc.alpha * x - 1.0));
}

double PriceLaw::price(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("PriceLaw::price: x outside [0, 1]");
    if (x >= 1.0) return top_price_;
    // segments are few; linear scan keeps the boundary convention obvious
    for (const auto& s : segments_)
        if (x < s.x_hi) return std::min(raw_value(s, x), top_price_);
    return top_price_;
}

double PriceLaw::cdf(double v) const {
    if (v >= top_price_) return 1.0;
    for (const auto& s : segments_) {
        if (const auto* c = std::get_if<Segment::Constant>(&s.form)) {
            if (v < c->price) return s.x_lo;
            continue;  // whole atom priced <= v; sup moves right
        }
        if (const auto* e = std::get_if<Segment::ScaledExp>(&s.form)) {
            if (v < raw_value(s, s.x_lo)) return s.x_lo;
            if (v >= raw_value(s, s.x_hi)) continue;
            const double x = std::log(v / e->scale) / e->rate;
            return std::clamp(x, s.x_lo, s.x_hi);
        }
        const auto& cc = std::get<Segment::ConjugateCurve>(s.form);
        if (v < raw_value(s, s.x_lo)) return s.x_lo;
        if (v >= raw_value(s, s.x_hi)) continue;
        const double profit = cc.conjugate->value(v).profit;
        const double x = (1.0 + std::log(profit / cc.base)) / cc.alpha;
        return std::clamp(x, s.x_lo, s.x_hi);
    }
    return 1.0;
}

double PriceLaw::integral(double a, double b) const {
    if (!(a >= 0.0 && b <= 1.0 && a <= b))
        throw std::domain_error("PriceLaw::integral: bad interval");
    double total = 0.0;
    for (const auto& s : segments_) {
        const double lo = std::max(a, s.x_lo);
        const double hi = std::min(b, s.x_hi);
        if (hi <= lo) continue;
        if (const auto* c = std::get_if<Segment::Constant>(&s.form)) {
            total += c->price * (hi - lo);
        } else if (const auto* e = std::get_if<Segment::ScaledExp>(&s.form)) {
            total += e->scale / e->rate * (std::exp(e->rate * hi) - std::exp(e->rate * lo));
        } else {
            total += integrate([&](double x) { return std::min(raw_value(s, x), top_price_); },
                               lo, hi, kQuadRelTol);
        }
    }
    return total;
}

double PriceLaw::expected_price() const { return integral(0.0, 1.0); }

}  // namespace plab
