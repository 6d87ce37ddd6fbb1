#ifndef SBINT_QUADRATURE_HPP
#define SBINT_QUADRATURE_HPP

#include <functional>

namespace sbint {

// Adaptive Gauss-Kronrod 7/15 bisection to a relative tolerance (measured
// against a coarse composite estimate of the whole integral). Interior-node
// rule, so integrable endpoint singularities are refined, never evaluated.
double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol);

// int_0^1 r^{effective_dim - 1 + power} (1 - r^2)^q dr, the radial factor of
// every ball integral. For q < 0 the boundary piece is computed after the
// substitution u = (1 - r^2)^{q+1}, which removes the endpoint singularity;
// requires effective_dim + power > 0 and q > -1.
double radial_quadrature(double effective_dim, double power, double q, double tol);

// int_0^infty r^{effective_dim - 1 + power} e^{-r^2} dr, the radial factor of
// the Gaussian-weighted integrals, truncated where the tail is negligible
// relative to the peak.
double gaussian_radial_quadrature(double effective_dim, double power, double tol);

}  // namespace sbint

#endif  // SBINT_QUADRATURE_HPP
