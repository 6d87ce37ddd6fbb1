#ifndef SBINT_FORMULAS_HPP
#define SBINT_FORMULAS_HPP

#include <string>
#include <vector>

#include "spec_types.hpp"

namespace sbint {

// Reduced fraction, denominator > 0. Exponents of the growth laws are exact
// rationals in the spec parameters.
struct Rational {
  long long num = 0;
  long long den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

Rational make_rational(long long num, long long den);

// Nearest small fraction (denominator <= 10^6) within 1e-9; DomainError if
// the input is not close to one.
Rational rationalize(double x);

enum class Limit { QToInfinity, PToInfinity };

struct EvalOptions {
  bool want_exact = true;
};

// V(B) and S(S) for the unit ball/sphere in real dimension n, under either
// measure (the normalized measures of the full regions are 1 by definition).
// Exact forms are always attached.
IntegralValue ball_volume(int n, Measure measure);
IntegralValue sphere_surface(int n, Measure measure);

// Closed-form value of the spec'd integral. Dispatches over
// (space, region, integrand, measure); all 32 catalog families plus the
// signed-monomial symmetry rule route through here. The exact form is
// attached when p is an even integer 2m and, for ball regions, q is a
// nonnegative integer k (both detected at 1e-9 and snapped).
IntegralValue evaluate(const IntegralSpec& spec);
IntegralValue evaluate(const IntegralSpec& spec, const EvalOptions& opts);

// Catalog label for the spec ("J3", "K6'''", ...); "custom" for signed
// monomials. Prime level: none/single = Lebesgue/normalized general
// parameters, double/triple = Lebesgue/normalized integer parameters; the
// most specific pattern wins.
std::string family_label(const IntegralSpec& spec);

// Exact growth exponent e with value ~ t^e * anchor_norm^p as the limit
// variable t -> infinity. Supported: ball families as q -> infinity, and
// sphere/ball inner-product families as p -> infinity. UnsupportedError
// otherwise (notably the Gaussian families, whose p -> infinity growth is
// super-polynomial and not in the catalog).
Rational asymptotic_exponent(const IntegralSpec& spec, Limit limit);

// max/min of value(t) * t^{-e} / anchor_norm^{p(t)} over the probe points,
// evaluated entirely in log space. The two-sided growth bound makes this
// ratio O(1); the acceptance gate checks <= 4 over t in {1e3..1e6}.
double asymptote_ratio(const IntegralSpec& spec, Limit limit,
                       const std::vector<double>& ts);

}  // namespace sbint

#endif  // SBINT_FORMULAS_HPP
