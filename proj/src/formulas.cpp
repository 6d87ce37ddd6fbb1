#include "formulas.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"
#include "special_functions.hpp"

namespace sbint {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kIntegerTol = 1e-9;

bool near_integer(double x, long& k) {
  const double r = std::round(x);
  if (std::fabs(x - r) > kIntegerTol) return false;
  if (std::fabs(r) > 9.0e15) return false;
  k = static_cast<long>(r);
  return true;
}

// p = 2m with m a nonnegative integer, at the catalog detection tolerance.
bool even_power(double p, long& m) {
  long k = 0;
  if (!near_integer(p, k) || k < 0 || k % 2 != 0) return false;
  m = k / 2;
  return true;
}

IntegralValue make_zero_value() {
  IntegralValue v;
  v.zero = true;
  v.log_value = LogValue{std::numeric_limits<double>::quiet_NaN()};
  v.value = 0.0;
  v.exact = ExactValue::zero();
  return v;
}

IntegralValue finish(double log_value, std::optional<ExactValue> exact) {
  IntegralValue out;
  out.log_value = LogValue{log_value};
  const double v = std::exp(log_value);
  if (std::isfinite(v)) out.value = v;
  out.exact = std::move(exact);
  return out;
}

double log_ball_volume(int real_dim) {
  return 0.5 * real_dim * kLogPi - log_gamma(1.0 + 0.5 * real_dim);
}

ExactValue exact_ball_volume(int real_dim) {
  return ExactValue(mpq_class(1), real_dim) /
         exact_gamma_half_integer(real_dim + 2);
}

// Total standard measure of the spec's region: S(S) for the sphere, V(B)
// for the ball and (by the catalog's Gaussian normalization convention) for
// Gaussian-weighted space as well.
double log_region_measure(const IntegralSpec& spec) {
  const int d = spec.space.real_dim();
  const double log_v = log_ball_volume(d);
  return spec.region == RegionKind::Sphere ? std::log(double(d)) + log_v : log_v;
}

ExactValue exact_region_measure(const IntegralSpec& spec) {
  const int d = spec.space.real_dim();
  ExactValue v = exact_ball_volume(d);
  return spec.region == RegionKind::Sphere ? ExactValue::integer(d) * v : v;
}

// Standard-measure log value of the monomial families (J1-J4 / K1-K4 with
// the parameters as given; the inner-product families reduce to alpha = e1).
double log_monomial_standard(const IntegralSpec& spec, double p, double q) {
  const MultiIndex& alpha = spec.integrand.alpha;
  const double s = static_cast<double>(alpha.weight()) * p;

  if (spec.space.kind == SpaceKind::Real) {
    const int n = spec.space.dim;
    double lg_sum = 0.0;
    for (unsigned a : alpha.entries) lg_sum += log_gamma(0.5 * (1.0 + a * p));
    switch (spec.region) {
      case RegionKind::GaussianSpace:
        return lg_sum;
      case RegionKind::Sphere:
        return kLog2 + lg_sum - log_gamma(0.5 * (n + s));
      case RegionKind::Ball:
        return log_gamma(1.0 + q) + lg_sum - log_gamma(1.0 + q + 0.5 * (n + s));
    }
  } else {
    const int N = spec.space.dim;
    double lg_sum = 0.0;
    for (unsigned a : alpha.entries) lg_sum += log_gamma(1.0 + 0.5 * a * p);
    switch (spec.region) {
      case RegionKind::GaussianSpace:
        return N * kLogPi + lg_sum;
      case RegionKind::Sphere:
        return kLog2 + N * kLogPi + lg_sum - log_gamma(N + 0.5 * s);
      case RegionKind::Ball:
        return N * kLogPi + log_gamma(1.0 + q) + lg_sum -
               log_gamma(1.0 + q + N + 0.5 * s);
    }
  }
  throw DomainError("evaluate: unreachable region");
}

// Exact mirror of log_monomial_standard for p = 2m (and ball q = k).
ExactValue exact_monomial_standard(const IntegralSpec& spec, long m, long k) {
  const MultiIndex& alpha = spec.integrand.alpha;
  const long weight_s = 2 * m * static_cast<long>(alpha.weight());

  if (spec.space.kind == SpaceKind::Real) {
    const int n = spec.space.dim;
    ExactValue prod = ExactValue::one();
    for (unsigned a : alpha.entries) {
      prod = prod * exact_gamma_half_integer(1 + 2 * m * static_cast<long>(a));
    }
    switch (spec.region) {
      case RegionKind::GaussianSpace:
        return prod;
      case RegionKind::Sphere:
        return ExactValue::integer(2) * prod /
               exact_gamma_half_integer(n + weight_s);
      case RegionKind::Ball:
        return exact_factorial(static_cast<unsigned long>(k)) * prod /
               exact_gamma_half_integer(2 + 2 * k + n + weight_s);
    }
  } else {
    const int N = spec.space.dim;
    ExactValue prod = ExactValue::one();
    for (unsigned a : alpha.entries) {
      prod = prod * exact_gamma_half_integer(2 + 2 * m * static_cast<long>(a));
    }
    const ExactValue pi_pow_n(mpq_class(1), 2 * N);
    switch (spec.region) {
      case RegionKind::GaussianSpace:
        return pi_pow_n * prod;
      case RegionKind::Sphere:
        return ExactValue::integer(2) * pi_pow_n * prod /
               exact_gamma_half_integer(2 * N + weight_s);
      case RegionKind::Ball:
        return pi_pow_n * exact_factorial(static_cast<unsigned long>(k)) * prod /
               exact_gamma_half_integer(2 + 2 * k + 2 * N + weight_s);
    }
  }
  throw DomainError("evaluate: unreachable region");
}

// Integer-parameter detection shared between evaluation, exact emission and
// the family labels. Snaps p/q so the float and exact routes agree bit-near.
struct IntegerCase {
  bool active = false;
  long m = 0;  // p = 2m
  long k = 0;  // q = k (ball only; 0 elsewhere)
};

IntegerCase detect_integer_case(const IntegralSpec& spec) {
  IntegerCase ic;
  if (spec.integrand.kind == IntegrandKind::SignedMonomial) return ic;
  if (!even_power(spec.integrand.p, ic.m)) return ic;
  if (spec.region == RegionKind::Ball) {
    if (!near_integer(spec.q, ic.k) || ic.k < 0) return ic;
  }
  ic.active = true;
  return ic;
}

IntegralValue evaluate_monomial(const IntegralSpec& spec, const EvalOptions& opts) {
  const IntegerCase ic = detect_integer_case(spec);
  const double p = ic.active ? 2.0 * ic.m : spec.integrand.p;
  const double q = (spec.region == RegionKind::Ball && ic.active)
                       ? static_cast<double>(ic.k)
                       : spec.q;

  double log_val = log_monomial_standard(spec, p, q);
  std::optional<ExactValue> exact;
  if (ic.active && opts.want_exact) {
    ExactValue ev = exact_monomial_standard(spec, ic.m, ic.k);
    if (spec.measure == Measure::Normalized) ev = ev / exact_region_measure(spec);
    exact = std::move(ev);
  }
  if (spec.measure == Measure::Normalized) log_val -= log_region_measure(spec);
  return finish(log_val, std::move(exact));
}

MultiIndex first_basis_index(int dim) {
  MultiIndex e1;
  e1.entries.assign(static_cast<std::size_t>(dim), 0u);
  e1.entries[0] = 1u;
  return e1;
}

}  // namespace

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational rationalize(double x) {
  if (!std::isfinite(x)) throw DomainError("rationalize: non-finite input");
  const double tol = kIntegerTol * std::max(1.0, std::fabs(x));
  long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents
  double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_floor = std::floor(v);
    if (std::fabs(a_floor) > 9.0e15) break;
    const long long a = static_cast<long long>(a_floor);
    const long long p2 = a * p0 + p1;
    const long long q2 = a * q0 + q1;
    if (q2 > 1000000) break;
    if (q2 != 0 &&
        std::fabs(x - static_cast<double>(p2) / static_cast<double>(q2)) <= tol) {
      return make_rational(p2, q2);
    }
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    const double frac = v - a_floor;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  throw DomainError("rationalize: " + std::to_string(x) +
                    " is not close to a fraction with denominator <= 10^6");
}

IntegralValue ball_volume(int n, Measure measure) {
  if (n < 1) throw DomainError("ball_volume: dimension must be >= 1");
  if (measure == Measure::Normalized) return finish(0.0, ExactValue::one());
  return finish(log_ball_volume(n), exact_ball_volume(n));
}

IntegralValue sphere_surface(int n, Measure measure) {
  if (n < 1) throw DomainError("sphere_surface: dimension must be >= 1");
  if (measure == Measure::Normalized) return finish(0.0, ExactValue::one());
  return finish(std::log(double(n)) + log_ball_volume(n),
                ExactValue::integer(n) * exact_ball_volume(n));
}

IntegralValue evaluate(const IntegralSpec& spec) { return evaluate(spec, EvalOptions{}); }

IntegralValue evaluate(const IntegralSpec& spec, const EvalOptions& opts) {
  spec.validate();
  const Integrand& g = spec.integrand;

  switch (g.kind) {
    case IntegrandKind::SignedMonomial: {
      if (g.alpha.any_odd()) return make_zero_value();
      // All entries even: x^alpha = |x^alpha|, so this is the p = 1 monomial.
      IntegralSpec reduced = spec;
      reduced.integrand = Integrand::monomial(g.alpha, 1.0);
      return evaluate_monomial(reduced, opts);
    }
    case IntegrandKind::InnerProductPower: {
      if (g.anchor_norm == 0.0 && g.p > 0.0) return make_zero_value();
      // Rotation invariance: anchor pinned to |y| e1, so the sphere part is
      // the alpha = e1 monomial and the anchor contributes |y|^p.
      IntegralSpec reduced = spec;
      reduced.integrand = Integrand::monomial(first_basis_index(spec.space.dim), g.p);
      IntegralValue base = evaluate_monomial(reduced, opts);
      if (g.p == 0.0) return base;  // 0^0 = 1: plain region measure

      const double log_anchor_term = g.p * std::log(g.anchor_norm);
      std::optional<ExactValue> exact;
      if (base.exact) {
        long m = 0;
        even_power(g.p, m);
        exact = *base.exact *
                ExactValue::from_double(g.anchor_norm).pow(2 * static_cast<unsigned long>(m));
      }
      return finish(base.log_value.log_magnitude + log_anchor_term, std::move(exact));
    }
    case IntegrandKind::MonomialAbsPower:
      return evaluate_monomial(spec, opts);
  }
  throw DomainError("evaluate: unreachable integrand");
}

std::string family_label(const IntegralSpec& spec) {
  spec.validate();
  if (spec.integrand.kind == IntegrandKind::SignedMonomial) return "custom";

  int index = 0;
  switch (spec.region) {
    case RegionKind::GaussianSpace: index = 1; break;
    case RegionKind::Sphere: index = 2; break;
    case RegionKind::Ball: {
      long k = 0;
      index = (near_integer(spec.q, k) && k == 0) ? 4 : 3;
      break;
    }
  }
  if (spec.integrand.kind == IntegrandKind::InnerProductPower) index += 4;

  std::string label(1, spec.space.kind == SpaceKind::Real ? 'J' : 'K');
  label += std::to_string(index);

  const bool integer_case = detect_integer_case(spec).active;
  const bool normalized = spec.measure == Measure::Normalized;
  if (integer_case) {
    label += normalized ? "'''" : "''";
  } else if (normalized) {
    label += "'";
  }
  return label;
}

Rational asymptotic_exponent(const IntegralSpec& spec, Limit limit) {
  spec.validate();
  const Integrand& g = spec.integrand;
  if (g.kind == IntegrandKind::SignedMonomial) {
    throw UnsupportedError("asymptotics: signed monomials are not in the catalog");
  }
  const bool complex = spec.space.kind == SpaceKind::Complex;
  const long long dim = spec.space.dim;

  if (limit == Limit::QToInfinity) {
    if (spec.region != RegionKind::Ball) {
      throw UnsupportedError("asymptotics: q -> infinity applies to ball families only");
    }
    const Rational p = rationalize(g.p);
    const long long a = (g.kind == IntegrandKind::MonomialAbsPower)
                            ? static_cast<long long>(g.alpha.weight())
                            : 1;
    // real: -(n + a p)/2, complex: -(N + a p/2)
    const long long n_eff = complex ? 2 * dim : dim;
    return make_rational(-(n_eff * p.den + a * p.num), 2 * p.den);
  }

  // p -> infinity
  if (g.kind != IntegrandKind::InnerProductPower) {
    throw UnsupportedError("asymptotics: p -> infinity applies to inner-product families only");
  }
  if (spec.region == RegionKind::GaussianSpace) {
    throw UnsupportedError(
        "asymptotics: Gaussian inner-product growth is super-polynomial; no catalog exponent");
  }
  if (spec.region == RegionKind::Sphere) {
    return complex ? make_rational(-(dim - 1), 1) : make_rational(-(dim - 1), 2);
  }
  const Rational q = rationalize(spec.q);
  if (complex) {
    return make_rational(-(dim * q.den + q.num), q.den);  // -(N + q)
  }
  return make_rational(-((dim + 1) * q.den + 2 * q.num), 2 * q.den);  // -(n+1+2q)/2
}

double asymptote_ratio(const IntegralSpec& spec, Limit limit,
                       const std::vector<double>& ts) {
  const Rational e = asymptotic_exponent(spec, limit);
  if (ts.empty()) throw DomainError("asymptote_ratio: empty probe set");
  if (limit == Limit::PToInfinity && spec.integrand.anchor_norm <= 0.0) {
    throw DomainError("asymptote_ratio: anchor norm must be positive for p -> infinity");
  }
  const double e_val = e.to_double();
  const EvalOptions opts{.want_exact = false};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double t : ts) {
    if (!(t > 0.0)) throw DomainError("asymptote_ratio: probe points must be positive");
    IntegralSpec probe = spec;
    if (limit == Limit::QToInfinity) {
      probe.q = t;
    } else {
      probe.integrand.p = t;
    }
    const IntegralValue v = evaluate(probe, opts);
    if (v.zero) throw DomainError("asymptote_ratio: zero value along the limit");
    double scaled = v.log_value.log_magnitude - e_val * std::log(t);
    if (limit == Limit::PToInfinity) {
      scaled -= t * std::log(spec.integrand.anchor_norm);
    }
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  return std::exp(hi - lo);
}

}  // namespace sbint
