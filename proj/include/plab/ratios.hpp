#pragma once

namespace plab {

/// Best ratio attainable by price-ladder selling with C units: alpha solves
///   (1 + alpha/C)^(C - gamma) = C*theta / (gamma*alpha),  gamma = ceil(C/alpha).
/// low_price_units is gamma, the number of units offered at the floor price.
struct FiniteSupplyRatio {
    double alpha;
    int low_price_units;
    double residual;  // |lhs - rhs| of the defining equation
};

/// Resolves the gamma = ceil(C/alpha) circularity by enumerating gamma and
/// bisecting alpha inside each candidate, keeping the consistent pair with
/// minimal alpha. Guarantees 1 + ln(theta) < alpha <= theta for theta > 1,
/// alpha(C=1) = theta exactly, and alpha nonincreasing in C.
FiniteSupplyRatio solve_finite_supply_ratio(int capacity, double theta);

/// Assignment-problem ratio: omega in (0,1) solves
///   e^w/(e^w - 1) = ln(theta)/(1 - w),   alpha = e^w/(e^w - 1).
/// residual is |alpha*(1 - omega) - ln(theta)| (the cross-multiplied form;
/// the raw quotient is numerically stiff as theta -> 1).
struct AssignmentRatio {
    double omega;
    double alpha;
    double residual;
};

AssignmentRatio solve_assignment_ratio(double theta);

/// Minimum expected units any alpha-competitive scheme must have sold once
/// the running top valuation reaches v: C * (1 + ln(v/L)) / alpha.
/// Equals capacity exactly at v = U when alpha = 1 + ln(theta).
double required_sales(int capacity, double alpha, double floor_price, double v);

}  // namespace plab
