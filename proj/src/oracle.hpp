#ifndef SBINT_ORACLE_HPP
#define SBINT_ORACLE_HPP

#include <cstdint>

#include "spec_types.hpp"

namespace sbint {

// Monte Carlo configuration. The estimate is a pure function of
// (spec, samples, seed, chunk_size): samples are partitioned into fixed
// chunks, chunk c draws from a splitmix64 stream whose state is
// mix64(seed ^ mix64(0x9E3779B97F4A7C15 * (c + 1))), and partial sums are
// reduced in chunk order. Thread count therefore never changes the result.
struct OracleConfig {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 65536;
};

struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples_used = 0;
};

// Unbiased Monte Carlo estimate of the spec'd integral under the spec's
// measure. Sphere directions are normalized standard Gaussian vectors, ball
// radii use the inverse CDF U^{1/d}, Gaussian space samples each real
// coordinate from the density e^{-x^2}/sqrt(pi). Standard-measure results
// scale the normalized estimate by the region constant. Rejects ball specs
// with q < 0 (unbounded variance near the boundary); hybrid_estimate is the
// sanctioned path there.
Estimate mc_estimate(const IntegralSpec& spec, const OracleConfig& config,
                     int threads = 1);

// Deterministic value via angular x radial composite quadrature. Supports
// real n <= 2 and complex N = 1; relative error <= tol away from the
// q -> -1 boundary. Requires tol >= 1e-12.
double quadrature_estimate(const IntegralSpec& spec, double tol);

// Ball specs with -1 < q < 0: Monte Carlo over the sphere factor composed
// with the deterministic singular radial factor. The standard error is
// inherited from the sphere part.
Estimate hybrid_estimate(const IntegralSpec& spec, const OracleConfig& config,
                         double tol, int threads = 1);

}  // namespace sbint

#endif  // SBINT_ORACLE_HPP
