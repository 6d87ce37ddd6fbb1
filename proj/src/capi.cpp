#include "sbint/sbint.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "spec_types.hpp"
#include "special_functions.hpp"

namespace {

thread_local std::string g_last_error;

sbint_status record_error(sbint_status status, const char* what) {
  g_last_error = what != nullptr ? what : "";
  return status;
}

// Translates the core exception hierarchy into status codes at the C
// boundary; nothing may propagate past extern "C".
template <typename Fn>
sbint_status guarded(Fn&& fn) {
  try {
    fn();
    return SBINT_OK;
  } catch (const sbint::DivergenceError& e) {
    return record_error(SBINT_ERROR_DIVERGENT, e.what());
  } catch (const sbint::DimensionError& e) {
    return record_error(SBINT_ERROR_DIMENSION, e.what());
  } catch (const sbint::UnsupportedError& e) {
    return record_error(SBINT_ERROR_UNSUPPORTED, e.what());
  } catch (const sbint::OverflowError& e) {
    return record_error(SBINT_ERROR_OVERFLOW, e.what());
  } catch (const sbint::DomainError& e) {
    return record_error(SBINT_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return record_error(SBINT_ERROR_INVALID, "out of memory");
  } catch (const std::exception& e) {
    return record_error(SBINT_ERROR_INVALID, e.what());
  }
}

}  // namespace

struct sbint_spec_s {
  sbint::IntegralSpec spec;
};

struct sbint_result_s {
  sbint::IntegralValue value;
  std::string exact;
  bool has_exact = false;
  std::string family;
};

extern "C" {

sbint_spec* sbint_spec_create(sbint_space space, int dim) {
  auto* handle = new (std::nothrow) sbint_spec_s();
  if (handle == nullptr) return nullptr;
  handle->spec.space.kind =
      space == SBINT_SPACE_COMPLEX ? sbint::SpaceKind::Complex : sbint::SpaceKind::Real;
  handle->spec.space.dim = dim;
  handle->spec.region = sbint::RegionKind::Sphere;
  handle->spec.measure = sbint::Measure::Standard;
  handle->spec.integrand =
      sbint::Integrand::monomial(sbint::MultiIndex(std::vector<unsigned>(
                                     dim > 0 ? static_cast<std::size_t>(dim) : 1, 0u)),
                                 0.0);
  return handle;
}

void sbint_spec_destroy(sbint_spec* spec) { delete spec; }

sbint_status sbint_spec_set_region(sbint_spec* spec, sbint_region region, double q) {
  if (spec == nullptr) return record_error(SBINT_ERROR_INVALID, "null spec");
  switch (region) {
    case SBINT_REGION_GAUSSIAN:
      spec->spec.region = sbint::RegionKind::GaussianSpace;
      spec->spec.q = 0.0;
      break;
    case SBINT_REGION_SPHERE:
      spec->spec.region = sbint::RegionKind::Sphere;
      spec->spec.q = 0.0;
      break;
    case SBINT_REGION_BALL:
      spec->spec.region = sbint::RegionKind::Ball;
      spec->spec.q = q;
      break;
    default:
      return record_error(SBINT_ERROR_INVALID, "unknown region");
  }
  return SBINT_OK;
}

sbint_status sbint_spec_set_measure(sbint_spec* spec, sbint_measure measure) {
  if (spec == nullptr) return record_error(SBINT_ERROR_INVALID, "null spec");
  spec->spec.measure = measure == SBINT_MEASURE_NORMALIZED
                           ? sbint::Measure::Normalized
                           : sbint::Measure::Standard;
  return SBINT_OK;
}

sbint_status sbint_spec_set_monomial(sbint_spec* spec, const unsigned* alpha,
                                     size_t alpha_len, double p) {
  if (spec == nullptr || (alpha == nullptr && alpha_len > 0)) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  spec->spec.integrand = sbint::Integrand::monomial(
      sbint::MultiIndex(std::vector<unsigned>(alpha, alpha + alpha_len)), p);
  return SBINT_OK;
}

sbint_status sbint_spec_set_signed_monomial(sbint_spec* spec, const unsigned* alpha,
                                            size_t alpha_len) {
  if (spec == nullptr || (alpha == nullptr && alpha_len > 0)) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  spec->spec.integrand = sbint::Integrand::signed_monomial(
      sbint::MultiIndex(std::vector<unsigned>(alpha, alpha + alpha_len)));
  return SBINT_OK;
}

sbint_status sbint_spec_set_inner_product(sbint_spec* spec, double p,
                                          double anchor_norm) {
  if (spec == nullptr) return record_error(SBINT_ERROR_INVALID, "null spec");
  spec->spec.integrand = sbint::Integrand::inner_product(p, anchor_norm);
  return SBINT_OK;
}

namespace {

sbint_result* wrap_result(const sbint::IntegralValue& value, std::string family) {
  auto* result = new sbint_result_s();
  result->value = value;
  if (value.exact.has_value()) {
    result->has_exact = true;
    result->exact = value.exact->to_string();
  }
  result->family = std::move(family);
  return result;
}

}  // namespace

sbint_status sbint_evaluate(const sbint_spec* spec, int want_exact,
                            sbint_result** out) {
  if (spec == nullptr || out == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    const sbint::EvalOptions opts{.want_exact = want_exact != 0};
    const sbint::IntegralValue value = sbint::evaluate(spec->spec, opts);
    *out = wrap_result(value, sbint::family_label(spec->spec));
  });
}

void sbint_result_destroy(sbint_result* result) { delete result; }

int sbint_result_is_zero(const sbint_result* result) {
  return result != nullptr && result->value.zero ? 1 : 0;
}

int sbint_result_has_value(const sbint_result* result) {
  return result != nullptr && result->value.value.has_value() ? 1 : 0;
}

double sbint_result_value(const sbint_result* result) {
  if (result == nullptr || !result->value.value.has_value()) return 0.0;
  return *result->value.value;
}

double sbint_result_log_value(const sbint_result* result) {
  if (result == nullptr) return 0.0;
  return result->value.log_value.log_magnitude;
}

const char* sbint_result_exact(const sbint_result* result) {
  if (result == nullptr || !result->has_exact) return nullptr;
  return result->exact.c_str();
}

const char* sbint_result_family(const sbint_result* result) {
  return result == nullptr ? "" : result->family.c_str();
}

sbint_status sbint_ball_volume(int n, sbint_measure measure, sbint_result** out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] {
    const auto m = measure == SBINT_MEASURE_NORMALIZED ? sbint::Measure::Normalized
                                                       : sbint::Measure::Standard;
    *out = wrap_result(sbint::ball_volume(n, m), "");
  });
}

sbint_status sbint_sphere_surface(int n, sbint_measure measure, sbint_result** out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] {
    const auto m = measure == SBINT_MEASURE_NORMALIZED ? sbint::Measure::Normalized
                                                       : sbint::Measure::Standard;
    *out = wrap_result(sbint::sphere_surface(n, m), "");
  });
}

sbint_status sbint_mc_estimate(const sbint_spec* spec, unsigned long long samples,
                               unsigned long long seed, unsigned long long chunk_size,
                               int threads, sbint_estimate* out) {
  if (spec == nullptr || out == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    const sbint::OracleConfig config{samples, seed, chunk_size};
    const sbint::Estimate est = sbint::mc_estimate(spec->spec, config, threads);
    *out = sbint_estimate{est.mean, est.standard_error, est.samples_used};
  });
}

sbint_status sbint_quadrature_estimate(const sbint_spec* spec, double tol,
                                       double* out) {
  if (spec == nullptr || out == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] { *out = sbint::quadrature_estimate(spec->spec, tol); });
}

sbint_status sbint_radial_quadrature(double effective_dim, double power, double q,
                                     double tol, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::radial_quadrature(effective_dim, power, q, tol); });
}

sbint_status sbint_hybrid_estimate(const sbint_spec* spec, unsigned long long samples,
                                   unsigned long long seed,
                                   unsigned long long chunk_size, int threads,
                                   double tol, sbint_estimate* out) {
  if (spec == nullptr || out == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    const sbint::OracleConfig config{samples, seed, chunk_size};
    const sbint::Estimate est = sbint::hybrid_estimate(spec->spec, config, tol, threads);
    *out = sbint_estimate{est.mean, est.standard_error, est.samples_used};
  });
}

sbint_status sbint_asymptotic_exponent(const sbint_spec* spec, sbint_limit limit,
                                       long long* num, long long* den) {
  if (spec == nullptr || num == nullptr || den == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    const auto lim = limit == SBINT_LIMIT_P ? sbint::Limit::PToInfinity
                                            : sbint::Limit::QToInfinity;
    const sbint::Rational e = sbint::asymptotic_exponent(spec->spec, lim);
    *num = e.num;
    *den = e.den;
  });
}

sbint_status sbint_asymptote_ratio(const sbint_spec* spec, sbint_limit limit,
                                   const double* ts, size_t ts_len, double* ratio) {
  if (spec == nullptr || ts == nullptr || ratio == nullptr) {
    return record_error(SBINT_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    const auto lim = limit == SBINT_LIMIT_P ? sbint::Limit::PToInfinity
                                            : sbint::Limit::QToInfinity;
    const std::vector<double> points(ts, ts + ts_len);
    *ratio = sbint::asymptote_ratio(spec->spec, lim, points);
  });
}

sbint_status sbint_log_gamma(double t, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::log_gamma(t); });
}

sbint_status sbint_gamma(double t, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::gamma(t); });
}

sbint_status sbint_log_pochhammer(double a, double b, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::log_pochhammer(a, b); });
}

sbint_status sbint_pochhammer(double a, double b, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::pochhammer(a, b); });
}

sbint_status sbint_log_beta(double a, double b, double* out) {
  if (out == nullptr) return record_error(SBINT_ERROR_INVALID, "null out");
  return guarded([&] { *out = sbint::log_beta(a, b); });
}

const char* sbint_last_error(void) { return g_last_error.c_str(); }

const char* sbint_status_name(sbint_status status) {
  switch (status) {
    case SBINT_OK: return "ok";
    case SBINT_ERROR_DOMAIN: return "domain-error";
    case SBINT_ERROR_DIVERGENT: return "divergent";
    case SBINT_ERROR_DIMENSION: return "dimension-mismatch";
    case SBINT_ERROR_UNSUPPORTED: return "unsupported";
    case SBINT_ERROR_OVERFLOW: return "overflow";
    case SBINT_ERROR_INVALID: return "invalid";
  }
  return "unknown";
}

const char* sbint_version(void) { return "1.0.0"; }

}  // extern "C"
