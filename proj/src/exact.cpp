#include "exact.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace sbint {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog2 = 0.69314718055994530942;

mpz_class factorial_mpz(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// ln|z| via mantissa/exponent split; exact up to double rounding even for
// integers with millions of bits.
double log_abs_mpz(const mpz_class& z) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * kLog2;
}

}  // namespace

unsigned long MultiIndex::weight() const {
  unsigned long total = 0;
  for (unsigned e : entries) total += e;
  return total;
}

MultiIndex MultiIndex::scaled(unsigned long m) const {
  MultiIndex out;
  out.entries.reserve(entries.size());
  for (unsigned e : entries) out.entries.push_back(static_cast<unsigned>(e * m));
  return out;
}

bool MultiIndex::all_even() const {
  for (unsigned e : entries) {
    if (e % 2 != 0) return false;
  }
  return true;
}

bool MultiIndex::any_odd() const { return !all_even(); }

ExactValue::ExactValue(mpq_class coef, long pi_half)
    : coef_(std::move(coef)), pi_half_(pi_half) {
  coef_.canonicalize();
  if (coef_ == 0) pi_half_ = 0;  // canonical zero
}

ExactValue ExactValue::rational(long num, long den, long pi_half) {
  if (den == 0) throw DomainError("ExactValue: zero denominator");
  return ExactValue(mpq_class(num, den), pi_half);
}

ExactValue ExactValue::from_double(double v) {
  if (!std::isfinite(v)) {
    throw DomainError("ExactValue::from_double: non-finite input");
  }
  return ExactValue(mpq_class(v), 0);
}

ExactValue ExactValue::reciprocal() const {
  if (is_zero()) throw DomainError("ExactValue: reciprocal of zero");
  return ExactValue(1 / coef_, -pi_half_);
}

ExactValue ExactValue::pow(unsigned long e) const {
  if (e == 0) return one();
  if (is_zero()) return zero();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), coef_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), coef_.get_den().get_mpz_t(), e);
  return ExactValue(mpq_class(num, den), pi_half_ * static_cast<long>(e));
}

double ExactValue::to_double() const {
  if (is_zero()) return 0.0;
  return coef_.get_d() * std::pow(M_PI, 0.5 * static_cast<double>(pi_half_));
}

LogValue ExactValue::to_log() const {
  if (sign() <= 0) {
    throw DomainError("ExactValue::to_log: value must be strictly positive");
  }
  const double log_rat =
      log_abs_mpz(coef_.get_num()) - log_abs_mpz(coef_.get_den());
  return LogValue{log_rat + 0.5 * static_cast<double>(pi_half_) * kLogPi};
}

std::string ExactValue::to_string() const {
  if (is_zero()) return "0";

  std::string rat = coef_.get_num().get_str();
  if (coef_.get_den() != 1) rat += "/" + coef_.get_den().get_str();

  if (pi_half_ == 0) return rat;

  std::string pi_part;
  if (pi_half_ == 2) {
    pi_part = "π";
  } else if (pi_half_ % 2 == 0) {
    pi_part = "π^{" + std::to_string(pi_half_ / 2) + "}";
  } else {
    pi_part = "π^{" + std::to_string(pi_half_) + "/2}";
  }

  if (coef_ == 1) return pi_part;
  if (coef_ == -1) return "-" + pi_part;
  return rat + "·" + pi_part;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero() || b.is_zero()) return ExactValue::zero();
  return ExactValue(a.coef_ * b.coef_, a.pi_half_ + b.pi_half_);
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) {
  return a * b.reciprocal();
}

bool operator==(const ExactValue& a, const ExactValue& b) {
  return a.coef_ == b.coef_ && a.pi_half_ == b.pi_half_;
}

bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

ExactValue exact_mul(const ExactValue& a, const ExactValue& b) { return a * b; }

ExactValue exact_div(const ExactValue& a, const ExactValue& b) { return a / b; }

ExactValue exact_gamma_half_integer(long two_t) {
  if (two_t <= 0) {
    throw DomainError("exact_gamma_half_integer: argument must be positive");
  }
  if (two_t % 2 == 0) {
    // Gamma(k) = (k-1)!
    const unsigned long k = static_cast<unsigned long>(two_t / 2);
    return ExactValue(mpq_class(factorial_mpz(k - 1)), 0);
  }
  // Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
  const unsigned long m = static_cast<unsigned long>((two_t - 1) / 2);
  mpz_class four_pow_m;
  mpz_ui_pow_ui(four_pow_m.get_mpz_t(), 4, m);
  mpq_class coef(factorial_mpz(2 * m), four_pow_m * factorial_mpz(m));
  return ExactValue(std::move(coef), 1);
}

ExactValue exact_factorial(unsigned long k) {
  return ExactValue(mpq_class(factorial_mpz(k)), 0);
}

ExactValue multiindex_factorial(const MultiIndex& alpha) {
  mpz_class prod = 1;
  for (unsigned e : alpha.entries) prod *= factorial_mpz(e);
  return ExactValue(mpq_class(prod), 0);
}

}  // namespace sbint
