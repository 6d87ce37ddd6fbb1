#ifndef SBINT_EXACT_HPP
#define SBINT_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "special_functions.hpp"

namespace sbint {

// Multi-index alpha: tuple of nonnegative integers with the usual |alpha|,
// alpha! and m*alpha semantics.
struct MultiIndex {
  std::vector<unsigned> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  unsigned long weight() const;  // |alpha|
  MultiIndex scaled(unsigned long m) const;  // m*alpha, entrywise
  bool all_even() const;
  bool any_odd() const;
};

// Exact value in the normal form (num/den) * pi^(s/2). The rational part is
// kept canonical (gcd 1, positive denominator); zero is canonically
// (0, 1, s=0). s counts powers of sqrt(pi) so that odd real dimensions and
// half-integer gamma values stay closed under multiplication.
class ExactValue {
 public:
  ExactValue() : coef_(0), pi_half_(0) {}
  ExactValue(mpq_class coef, long pi_half);

  static ExactValue zero() { return ExactValue(); }
  static ExactValue one() { return ExactValue(mpq_class(1), 0); }
  static ExactValue integer(long v) { return ExactValue(mpq_class(v), 0); }
  static ExactValue rational(long num, long den, long pi_half = 0);
  // Exact dyadic rational of the stored double (no decimal rounding).
  static ExactValue from_double(double v);

  const mpq_class& coefficient() const { return coef_; }
  long pi_half_exponent() const { return pi_half_; }

  bool is_zero() const { return coef_ == 0; }
  int sign() const { return sgn(coef_); }

  ExactValue reciprocal() const;  // DomainError on zero
  ExactValue pow(unsigned long e) const;

  // Nearest double; may round to inf for components past the double range.
  double to_double() const;
  // ln(num/den) + (s/2) ln pi via exact mantissa/exponent splits, so it
  // stays accurate for factorials far beyond 10^300. DomainError unless
  // the value is strictly positive.
  LogValue to_log() const;

  // Rendering contract used verbatim by the CLI: "{num}/{den}·π^{s/2}" with
  // unit factors suppressed, e.g. "4/3·π", "1/2", "π^{1/2}", "0".
  std::string to_string() const;

  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b);
  friend bool operator==(const ExactValue& a, const ExactValue& b);
  friend bool operator!=(const ExactValue& a, const ExactValue& b);

 private:
  mpq_class coef_;
  long pi_half_;
};

ExactValue exact_mul(const ExactValue& a, const ExactValue& b);
ExactValue exact_div(const ExactValue& a, const ExactValue& b);

// Exact Gamma(t) for t = two_t/2 > 0: (k-1)! for integer t = k, and
// (2m)!/(4^m m!) * sqrt(pi) for t = m + 1/2.
ExactValue exact_gamma_half_integer(long two_t);

// k! as an exact integer.
ExactValue exact_factorial(unsigned long k);

// alpha! = prod_j alpha_j! as an exact integer.
ExactValue multiindex_factorial(const MultiIndex& alpha);

}  // namespace sbint

#endif  // SBINT_EXACT_HPP
