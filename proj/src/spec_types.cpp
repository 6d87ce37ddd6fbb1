#include "spec_types.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace sbint {

Integrand Integrand::monomial(MultiIndex alpha, double p) {
  Integrand g;
  g.kind = IntegrandKind::MonomialAbsPower;
  g.alpha = std::move(alpha);
  g.p = p;
  return g;
}

Integrand Integrand::inner_product(double p, double anchor_norm) {
  Integrand g;
  g.kind = IntegrandKind::InnerProductPower;
  g.p = p;
  g.anchor_norm = anchor_norm;
  return g;
}

Integrand Integrand::signed_monomial(MultiIndex alpha) {
  Integrand g;
  g.kind = IntegrandKind::SignedMonomial;
  g.alpha = std::move(alpha);
  return g;
}

void IntegralSpec::validate() const {
  if (space.dim < 1) {
    throw DomainError("spec: dimension must be >= 1, got " +
                      std::to_string(space.dim));
  }
  if (region == RegionKind::Ball) {
    if (!std::isfinite(q)) throw DomainError("spec: q must be finite");
    if (q <= -1.0) {
      throw DivergenceError("spec: ball integral diverges for q <= -1 (q = " +
                            std::to_string(q) + ")");
    }
  }
  switch (integrand.kind) {
    case IntegrandKind::MonomialAbsPower:
    case IntegrandKind::SignedMonomial:
      if (static_cast<int>(integrand.alpha.size()) != space.dim) {
        throw DimensionError(
            "spec: alpha has " + std::to_string(integrand.alpha.size()) +
            " entries but the space dimension is " + std::to_string(space.dim));
      }
      break;
    case IntegrandKind::InnerProductPower:
      if (!std::isfinite(integrand.anchor_norm) || integrand.anchor_norm < 0.0) {
        throw DomainError("spec: anchor norm must be finite and >= 0");
      }
      break;
  }
  if (integrand.kind == IntegrandKind::SignedMonomial) {
    if (space.kind != SpaceKind::Real) {
      throw DomainError("spec: signed monomials are defined for real spaces only");
    }
  } else {
    if (!std::isfinite(integrand.p) || integrand.p < 0.0) {
      throw DomainError("spec: exponent p must be finite and >= 0, got " +
                        std::to_string(integrand.p));
    }
  }
}

}  // namespace sbint
