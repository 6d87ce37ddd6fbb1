#include "oracle.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"

namespace sbint {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kLogPi = 1.1447298858494001741;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// splitmix64; the per-chunk stream seed is part of the reproducibility
// contract (see oracle.hpp).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state += kGolden;
    return mix64(state);
  }
};

inline std::uint64_t chunk_stream_seed(std::uint64_t seed, std::uint64_t chunk) {
  return mix64(seed ^ mix64(kGolden * (chunk + 1)));
}

inline double to_unit01(std::uint64_t u) { return (u >> 11) * 0x1.0p-53; }
inline double to_open01(std::uint64_t u) { return ((u >> 11) + 1) * 0x1.0p-53; }

inline double powi(double x, unsigned e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1u) r *= x;
    x *= x;
    e >>= 1u;
  }
  return r;
}

// Everything the per-sample loop needs, precomputed once per call.
struct SamplePlan {
  SpaceKind space;
  RegionKind region;
  IntegrandKind kind;
  int real_dim = 1;
  int pairs = 1;  // Box-Muller pairs per sample (fixed draw count)
  double inv_dim = 1.0;
  double q = 0.0;
  std::vector<std::pair<int, double>> sq_terms;       // (coord, exponent on |.|^2)
  std::vector<std::pair<int, unsigned>> signed_terms; // (coord, integer power)
  double const_factor = 1.0;                          // anchor_norm^p
  double scale = 1.0;                                 // measure constant
};

SamplePlan build_plan(const IntegralSpec& spec) {
  spec.validate();
  const Integrand& g = spec.integrand;

  SamplePlan pl;
  pl.space = spec.space.kind;
  pl.region = spec.region;
  pl.kind = g.kind;
  pl.real_dim = spec.space.real_dim();
  pl.pairs = (pl.real_dim + 1) / 2;
  pl.inv_dim = 1.0 / pl.real_dim;
  pl.q = spec.q;

  switch (g.kind) {
    case IntegrandKind::MonomialAbsPower:
      for (std::size_t j = 0; j < g.alpha.entries.size(); ++j) {
        if (g.alpha.entries[j] > 0) {
          pl.sq_terms.emplace_back(static_cast<int>(j), 0.5 * g.alpha.entries[j] * g.p);
        }
      }
      break;
    case IntegrandKind::InnerProductPower:
      if (g.p > 0.0) {
        pl.sq_terms.emplace_back(0, 0.5 * g.p);
        pl.const_factor = std::pow(g.anchor_norm, g.p);
      }
      break;
    case IntegrandKind::SignedMonomial:
      for (std::size_t j = 0; j < g.alpha.entries.size(); ++j) {
        if (g.alpha.entries[j] > 0) {
          pl.signed_terms.emplace_back(static_cast<int>(j), g.alpha.entries[j]);
        }
      }
      break;
  }

  if (spec.measure == Measure::Standard) {
    const int d = pl.real_dim;
    switch (spec.region) {
      case RegionKind::Sphere:
        pl.scale = *sphere_surface(d, Measure::Standard).value;
        break;
      case RegionKind::Ball:
        pl.scale = *ball_volume(d, Measure::Standard).value;
        break;
      case RegionKind::GaussianSpace:
        pl.scale = std::exp(0.5 * d * kLogPi);  // pi^{d/2}
        break;
    }
  } else if (spec.region == RegionKind::GaussianSpace) {
    // J1'/K1' convention: nu-normalization of the Gaussian integrals.
    pl.scale = std::exp(log_gamma(1.0 + 0.5 * pl.real_dim));
  }
  return pl;
}

struct ChunkAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
};

void run_chunk(const SamplePlan& pl, std::uint64_t chunk_index, std::uint64_t count,
               std::uint64_t seed, ChunkAccum& out) {
  SplitMix64 rng(chunk_stream_seed(seed, chunk_index));
  std::vector<double> buf(static_cast<std::size_t>(2 * pl.pairs));
  double sum = 0.0;
  double sum_sq = 0.0;

  for (std::uint64_t i = 0; i < count; ++i) {
    for (int k = 0; k < pl.pairs; ++k) {
      const double u1 = to_open01(rng.next());
      const double u2 = to_unit01(rng.next());
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double angle = kTwoPi * u2;
      buf[2 * k] = radius * std::cos(angle);
      buf[2 * k + 1] = radius * std::sin(angle);
    }

    double coord_scale;
    double weight = 1.0;
    if (pl.region == RegionKind::GaussianSpace) {
      coord_scale = M_SQRT1_2;  // N(0, 1/2) per real coordinate
    } else {
      double norm_sq = 0.0;
      for (int k = 0; k < pl.real_dim; ++k) norm_sq += buf[k] * buf[k];
      const double inv_norm = 1.0 / std::sqrt(norm_sq);
      if (pl.region == RegionKind::Ball) {
        const double r = std::pow(to_unit01(rng.next()), pl.inv_dim);
        coord_scale = r * inv_norm;
        weight = std::pow(1.0 - r * r, pl.q);
      } else {
        coord_scale = inv_norm;
      }
    }

    double f = pl.const_factor;
    if (pl.kind == IntegrandKind::SignedMonomial) {
      for (const auto& [j, a] : pl.signed_terms) {
        f *= powi(buf[j] * coord_scale, a);
      }
    } else if (pl.space == SpaceKind::Real) {
      for (const auto& [j, e] : pl.sq_terms) {
        const double x = buf[j] * coord_scale;
        f *= std::pow(x * x, e);
      }
    } else {
      for (const auto& [j, e] : pl.sq_terms) {
        const double re = buf[2 * j] * coord_scale;
        const double im = buf[2 * j + 1] * coord_scale;
        f *= std::pow(re * re + im * im, e);
      }
    }
    f *= weight;
    sum += f;
    sum_sq += f * f;
  }
  out.sum = sum;
  out.sum_sq = sum_sq;
}

}  // namespace

Estimate mc_estimate(const IntegralSpec& spec, const OracleConfig& config,
                     int threads) {
  if (spec.region == RegionKind::Ball && spec.q < 0.0) {
    spec.validate();
    throw DomainError(
        "mc_estimate: q < 0 has unbounded variance near the boundary; use hybrid_estimate");
  }
  if (config.samples == 0) throw DomainError("mc_estimate: samples must be positive");
  if (config.chunk_size == 0) throw DomainError("mc_estimate: chunk_size must be positive");

  const SamplePlan pl = build_plan(spec);
  const std::uint64_t n_chunks =
      (config.samples + config.chunk_size - 1) / config.chunk_size;
  std::vector<ChunkAccum> accum(n_chunks);

  const auto run = [&](std::uint64_t c) {
    const std::uint64_t begin = c * config.chunk_size;
    const std::uint64_t count = std::min<std::uint64_t>(config.chunk_size,
                                                        config.samples - begin);
    run_chunk(pl, c, count, config.seed, accum[c]);
  };

  int worker_count = threads;
  if (worker_count <= 0) {
    worker_count = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  worker_count = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count), n_chunks));

  if (worker_count <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
          run(c);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction keeps the result identical for any thread count.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkAccum& a : accum) {
    sum += a.sum;
    sum_sq += a.sum_sq;
  }

  const double n = static_cast<double>(config.samples);
  const double mean_raw = sum / n;
  double se_raw = 0.0;
  if (config.samples > 1) {
    const double variance = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    se_raw = std::sqrt(variance / n);
  }
  return Estimate{pl.scale * mean_raw, pl.scale * se_raw, config.samples};
}

namespace {

// Angular factor under the standard surface measure: the full integral of
// the integrand over S^0 (two points) or S^1 (circle), with the anchor and
// radial parts stripped.
double angular_integral(const IntegralSpec& spec, double tol) {
  const Integrand& g = spec.integrand;
  if (spec.space.kind == SpaceKind::Real && spec.space.dim == 1) {
    switch (g.kind) {
      case IntegrandKind::MonomialAbsPower:
        return 2.0;  // |(+-1)^alpha|^p = 1
      case IntegrandKind::SignedMonomial:
        return g.alpha.entries[0] % 2 == 0 ? 2.0 : 0.0;
      case IntegrandKind::InnerProductPower:
        return 2.0 * std::pow(g.anchor_norm, g.p);
    }
  }
  if (spec.space.kind == SpaceKind::Real && spec.space.dim == 2) {
    switch (g.kind) {
      case IntegrandKind::MonomialAbsPower: {
        const double e0 = 0.5 * g.alpha.entries[0] * g.p;
        const double e1 = 0.5 * g.alpha.entries[1] * g.p;
        return adaptive_gauss_kronrod(
            [&](double th) {
              const double c = std::cos(th);
              const double s = std::sin(th);
              return std::pow(c * c, e0) * std::pow(s * s, e1);
            },
            0.0, kTwoPi, tol);
      }
      case IntegrandKind::SignedMonomial: {
        const unsigned a0 = g.alpha.entries[0];
        const unsigned a1 = g.alpha.entries[1];
        return adaptive_gauss_kronrod(
            [&](double th) {
              return powi(std::cos(th), a0) * powi(std::sin(th), a1);
            },
            0.0, kTwoPi, tol);
      }
      case IntegrandKind::InnerProductPower: {
        const double e = 0.5 * g.p;
        const double anchor = std::pow(g.anchor_norm, g.p);
        return anchor * adaptive_gauss_kronrod(
                            [&](double th) {
                              const double c = std::cos(th);
                              return std::pow(c * c, e);
                            },
                            0.0, kTwoPi, tol);
      }
    }
  }
  // complex N = 1: |zeta_1| = 1 on the circle, so the integrand is constant
  const double constant = g.kind == IntegrandKind::InnerProductPower
                              ? std::pow(g.anchor_norm, g.p)
                              : 1.0;
  return adaptive_gauss_kronrod([&](double) { return constant; }, 0.0, kTwoPi, tol);
}

double radial_power(const Integrand& g) {
  switch (g.kind) {
    case IntegrandKind::MonomialAbsPower:
      return static_cast<double>(g.alpha.weight()) * g.p;
    case IntegrandKind::InnerProductPower:
      return g.p;
    case IntegrandKind::SignedMonomial:
      return static_cast<double>(g.alpha.weight());
  }
  return 0.0;
}

}  // namespace

double quadrature_estimate(const IntegralSpec& spec, double tol) {
  spec.validate();
  if (!(tol >= 1e-12)) {
    throw DomainError("quadrature_estimate: tol must be >= 1e-12");
  }
  const bool supported =
      (spec.space.kind == SpaceKind::Real && spec.space.dim <= 2) ||
      (spec.space.kind == SpaceKind::Complex && spec.space.dim == 1);
  if (!supported) {
    throw UnsupportedError(
        "quadrature_estimate: supported for real n <= 2 and complex N = 1 only");
  }

  const double angular = angular_integral(spec, tol);
  const int d = spec.space.real_dim();
  double value = angular;
  switch (spec.region) {
    case RegionKind::Sphere:
      break;
    case RegionKind::Ball:
      value *= radial_quadrature(d, radial_power(spec.integrand), spec.q, tol);
      break;
    case RegionKind::GaussianSpace:
      value *= gaussian_radial_quadrature(d, radial_power(spec.integrand), tol);
      break;
  }
  if (spec.measure == Measure::Normalized) {
    const IntegralValue m = spec.region == RegionKind::Sphere
                                ? sphere_surface(d, Measure::Standard)
                                : ball_volume(d, Measure::Standard);
    value /= *m.value;
  }
  return value;
}

Estimate hybrid_estimate(const IntegralSpec& spec, const OracleConfig& config,
                         double tol, int threads) {
  spec.validate();
  if (spec.region != RegionKind::Ball || spec.q >= 0.0) {
    throw DomainError("hybrid_estimate: requires a ball region with -1 < q < 0");
  }

  IntegralSpec sphere_part = spec;
  sphere_part.region = RegionKind::Sphere;
  sphere_part.q = 0.0;
  const Estimate sphere = mc_estimate(sphere_part, config, threads);

  const int d = spec.space.real_dim();
  const double radial = radial_quadrature(d, radial_power(spec.integrand), spec.q, tol);
  // dV factorizes as A * radial; dnu carries the extra dimension factor from
  // the normalized polar formula.
  const double factor = spec.measure == Measure::Normalized ? d * radial : radial;
  return Estimate{sphere.mean * factor, sphere.standard_error * factor,
                  sphere.samples_used};
}

}  // namespace sbint
