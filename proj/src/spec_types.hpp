#ifndef SBINT_SPEC_TYPES_HPP
#define SBINT_SPEC_TYPES_HPP

#include <optional>

#include "exact.hpp"
#include "special_functions.hpp"

namespace sbint {

enum class SpaceKind { Real, Complex };

// R^n or C^N. A complex space of dimension N sits inside real dimension 2N.
struct Space {
  SpaceKind kind = SpaceKind::Real;
  int dim = 1;  // n for real, N for complex

  int real_dim() const { return kind == SpaceKind::Real ? dim : 2 * dim; }
};

enum class RegionKind { GaussianSpace, Sphere, Ball };

enum class Measure { Standard, Normalized };

enum class IntegrandKind { MonomialAbsPower, InnerProductPower, SignedMonomial };

// |x^alpha|^p, |<x,y>|^p (anchor enters only through its norm, by rotation
// invariance), or the signed monomial x^alpha (real spaces only).
struct Integrand {
  IntegrandKind kind = IntegrandKind::MonomialAbsPower;
  MultiIndex alpha;          // monomial kinds
  double p = 0.0;            // MonomialAbsPower / InnerProductPower
  double anchor_norm = 1.0;  // InnerProductPower: |y| or |w|

  static Integrand monomial(MultiIndex alpha, double p);
  static Integrand inner_product(double p, double anchor_norm);
  static Integrand signed_monomial(MultiIndex alpha);
};

// Full description of one integral. The radial weight exponent q applies to
// Ball regions only and must stay above -1 (the integral diverges otherwise).
struct IntegralSpec {
  Space space;
  RegionKind region = RegionKind::Sphere;
  Integrand integrand;
  double q = 0.0;  // Ball only
  Measure measure = Measure::Standard;

  // Throws DomainError / DivergenceError / DimensionError on violated
  // invariants; every public entry point calls this first.
  void validate() const;
};

// Result of one evaluation. `zero` is a dedicated state for exact-zero
// integrals (odd signed monomials, anchor_norm = 0 with p > 0) where no log
// representation exists. `value` is absent when exp(log) overflows the
// double range. `exact` is present exactly when the parameters admit an
// integer-case closed form.
struct IntegralValue {
  bool zero = false;
  LogValue log_value{0.0};
  std::optional<double> value;
  std::optional<ExactValue> exact;
};

}  // namespace sbint

#endif  // SBINT_SPEC_TYPES_HPP
