#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace sbint {

namespace {

// QUADPACK dqk15 nodes and weights. kXGK odd indices plus the center are the
// embedded Gauss-7 nodes.
constexpr double kXGK[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0,
};
constexpr double kWGK[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801,
};
constexpr double kWG[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776,
};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = fc * kWGK[7];
  double resg = fc * kWG[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXGK[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWGK[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWG[j / 2] * (f1 + f2);
  }
  return PanelResult{resk * h, std::fabs((resk - resg) * h)};
}

}  // namespace

double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol) {
  if (!(b > a)) return 0.0;
  // The |I15 - I7| estimate is pessimistic on smooth panels; the 0.01 safety
  // factor buys the headroom that makes deviation decay monotone in practice.
  rel_tol = std::clamp(rel_tol * 0.01, 1e-15, 0.1);

  // Coarse composite pass fixes the absolute budget scale.
  double rough = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x0 = a + (b - a) * i / 8.0;
    const double x1 = a + (b - a) * (i + 1) / 8.0;
    rough += gk15(f, x0, x1).integral;
  }
  const double tol_abs = rel_tol * std::max(std::fabs(rough), 1e-300);

  struct Segment {
    double a, b;
    int depth;
  };
  std::vector<Segment> stack;
  stack.push_back(Segment{a, b, 0});
  const double total_len = b - a;
  double total = 0.0;
  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    const PanelResult r = gk15(f, seg.a, seg.b);
    const double len = seg.b - seg.a;
    const bool converged = r.error <= tol_abs * (len / total_len);
    if (converged || seg.depth >= 60 || len <= 1e-15 * total_len) {
      total += r.integral;
      continue;
    }
    const double mid = 0.5 * (seg.a + seg.b);
    stack.push_back(Segment{mid, seg.b, seg.depth + 1});
    stack.push_back(Segment{seg.a, mid, seg.depth + 1});
  }
  return total;
}

double radial_quadrature(double effective_dim, double power, double q, double tol) {
  if (!std::isfinite(effective_dim) || !std::isfinite(power) || !std::isfinite(q)) {
    throw DomainError("radial_quadrature: non-finite parameter");
  }
  if (!(effective_dim + power > 0.0)) {
    throw DomainError("radial_quadrature: requires effective_dim + power > 0");
  }
  if (q <= -1.0) {
    throw DivergenceError("radial_quadrature: divergent for q <= -1");
  }
  const double c = effective_dim - 1.0 + power;  // exponent of r
  const double split = 0.70710678118654752440;   // sqrt(1/2)

  double inner;  // [0, split]: smooth in r except possibly r^c with c < 0
  if (c >= 0.0) {
    inner = adaptive_gauss_kronrod(
        [&](double r) { return std::pow(r, c) * std::pow(1.0 - r * r, q); }, 0.0,
        split, tol);
  } else {
    // r = v^{1/(1+c)} flattens the r^c factor to 1.
    const double e = 1.0 + c;
    inner = adaptive_gauss_kronrod(
                [&](double v) { return std::pow(1.0 - std::pow(v, 2.0 / e), q); },
                0.0, std::pow(split, e), tol) /
            e;
  }

  double outer;  // [split, 1]: (1 - r^2)^q endpoint behavior
  if (q >= 0.0) {
    outer = adaptive_gauss_kronrod(
        [&](double r) { return std::pow(r, c) * std::pow(1.0 - r * r, q); }, split,
        1.0, tol);
  } else {
    // u = (1 - r^2)^{q+1} removes the singularity at r = 1.
    const double qp1 = q + 1.0;
    const double u0 = std::pow(0.5, qp1);
    const double half_cm1 = 0.5 * (c - 1.0);
    outer = adaptive_gauss_kronrod(
                [&](double u) {
                  return std::pow(1.0 - std::pow(u, 1.0 / qp1), half_cm1);
                },
                0.0, u0, tol) /
            (2.0 * qp1);
  }
  return inner + outer;
}

double gaussian_radial_quadrature(double effective_dim, double power, double tol) {
  if (!std::isfinite(effective_dim) || !std::isfinite(power)) {
    throw DomainError("gaussian_radial_quadrature: non-finite parameter");
  }
  const double c = effective_dim - 1.0 + power;
  if (c < 0.0) {
    throw DomainError("gaussian_radial_quadrature: requires effective_dim - 1 + power >= 0");
  }
  // Truncation point: far enough past the r = sqrt(c/2) peak that the tail
  // is below 1e-20 of the integral.
  const double upper = std::sqrt(0.5 * c + 70.0 + 10.0 * std::sqrt(c + 1.0));
  return adaptive_gauss_kronrod(
      [&](double r) { return std::pow(r, c) * std::exp(-r * r); }, 0.0, upper, tol);
}

}  // namespace sbint
