#ifndef SBINT_SPECIAL_FUNCTIONS_HPP
#define SBINT_SPECIAL_FUNCTIONS_HPP

namespace sbint {

// Natural log of a strictly positive quantity. Every closed form in the
// library is assembled in this representation and exponentiated once at the
// end, so parameters in the thousands never overflow.
struct LogValue {
  double log_magnitude;
};

// ln Gamma(t) for t > 0, relative error <= 1e-13 on (0, 1e6].
// Lanczos rational approximation up to t = 20, Stirling series beyond.
// Throws DomainError for t <= 0 or non-finite t.
double log_gamma(double t);

// Gamma(t) = exp(log_gamma(t)). Throws OverflowError once the result
// exceeds the double range (t above ~171.62).
double gamma(double t);

// ln (a)_b = ln Gamma(a+b) - ln Gamma(a). Requires a > 0 and a + b > 0.
double log_pochhammer(double a, double b);

// Pochhammer symbol (a)_b, the shifted factorial. For integer b = k this
// matches the rising product a(a+1)...(a+k-1).
double pochhammer(double a, double b);

// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b) for a, b > 0.
double log_beta(double a, double b);

}  // namespace sbint

#endif  // SBINT_SPECIAL_FUNCTIONS_HPP
