/*
 * sbint - exact and numerical integrals of |x^alpha|^p and |<x,y>|^p over
 * spheres, balls, and Gaussian-weighted space in R^n and C^N.
 *
 * C API over the C++ core: opaque handles, status codes, no exceptions
 * across the boundary. Thread-safe; the last error message is thread-local.
 */

#ifndef SBINT_H
#define SBINT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SBINT_API __declspec(dllexport)
#else
#define SBINT_API __attribute__((visibility("default")))
#endif

typedef enum sbint_status {
  SBINT_OK = 0,
  SBINT_ERROR_DOMAIN = 1,      /* argument outside mathematical domain */
  SBINT_ERROR_DIVERGENT = 2,   /* integral divergent (ball q <= -1) */
  SBINT_ERROR_DIMENSION = 3,   /* alpha length vs space dimension */
  SBINT_ERROR_UNSUPPORTED = 4, /* outside the supported catalog */
  SBINT_ERROR_OVERFLOW = 5,    /* result exceeds double range */
  SBINT_ERROR_INVALID = 6      /* null handle / malformed call */
} sbint_status;

typedef enum sbint_space { SBINT_SPACE_REAL = 0, SBINT_SPACE_COMPLEX = 1 } sbint_space;

typedef enum sbint_region {
  SBINT_REGION_GAUSSIAN = 0, /* all of R^n (or C^N) against e^{-|x|^2} */
  SBINT_REGION_SPHERE = 1,
  SBINT_REGION_BALL = 2
} sbint_region;

typedef enum sbint_measure {
  SBINT_MEASURE_LEBESGUE = 0,  /* V / S */
  SBINT_MEASURE_NORMALIZED = 1 /* nu / sigma (unit total mass) */
} sbint_measure;

typedef enum sbint_limit { SBINT_LIMIT_Q = 0, SBINT_LIMIT_P = 1 } sbint_limit;

/* -------------------------------------------------------------------- */
/* Integral specification (opaque)                                      */
/* -------------------------------------------------------------------- */

typedef struct sbint_spec_s sbint_spec;

/* dim is n for real spaces and N for complex ones. Returns NULL only on
 * allocation failure; invalid dimensions are reported at evaluation time. */
SBINT_API sbint_spec* sbint_spec_create(sbint_space space, int dim);
SBINT_API void sbint_spec_destroy(sbint_spec* spec);

/* q is read for SBINT_REGION_BALL only. */
SBINT_API sbint_status sbint_spec_set_region(sbint_spec* spec, sbint_region region,
                                             double q);
SBINT_API sbint_status sbint_spec_set_measure(sbint_spec* spec, sbint_measure measure);

/* |x^alpha|^p; alpha_len must equal the space dimension. */
SBINT_API sbint_status sbint_spec_set_monomial(sbint_spec* spec,
                                               const unsigned* alpha,
                                               size_t alpha_len, double p);
/* x^alpha without absolute values (real spaces only). */
SBINT_API sbint_status sbint_spec_set_signed_monomial(sbint_spec* spec,
                                                      const unsigned* alpha,
                                                      size_t alpha_len);
/* |<x,y>|^p; only the anchor norm |y| (resp. |w|) enters. */
SBINT_API sbint_status sbint_spec_set_inner_product(sbint_spec* spec, double p,
                                                    double anchor_norm);

/* -------------------------------------------------------------------- */
/* Evaluation results (opaque)                                          */
/* -------------------------------------------------------------------- */

typedef struct sbint_result_s sbint_result;

/* want_exact != 0 attaches the exact rational-times-power-of-pi form when
 * the parameters admit one (p an even integer, and for balls q a
 * nonnegative integer). */
SBINT_API sbint_status sbint_evaluate(const sbint_spec* spec, int want_exact,
                                      sbint_result** out);
SBINT_API void sbint_result_destroy(sbint_result* result);

SBINT_API int sbint_result_is_zero(const sbint_result* result);
SBINT_API int sbint_result_has_value(const sbint_result* result);
SBINT_API double sbint_result_value(const sbint_result* result);
/* Natural log of the (positive) value; NaN for exact-zero results. */
SBINT_API double sbint_result_log_value(const sbint_result* result);
/* "{num}/{den}·π^{s/2}" rendering, or NULL when no exact form is attached.
 * Owned by the result. */
SBINT_API const char* sbint_result_exact(const sbint_result* result);
/* Catalog label: "J1".."K8" with 0-3 primes, or "custom". Owned by the
 * result. */
SBINT_API const char* sbint_result_family(const sbint_result* result);

/* V(B) and S(S) in real dimension n (exact forms attached). */
SBINT_API sbint_status sbint_ball_volume(int n, sbint_measure measure,
                                         sbint_result** out);
SBINT_API sbint_status sbint_sphere_surface(int n, sbint_measure measure,
                                            sbint_result** out);

/* -------------------------------------------------------------------- */
/* Oracles                                                              */
/* -------------------------------------------------------------------- */

typedef struct sbint_estimate {
  double mean;
  double standard_error;
  unsigned long long samples_used;
} sbint_estimate;

/* Deterministic for fixed (spec, samples, seed, chunk_size); threads <= 0
 * means use all hardware threads, and never changes the result. */
SBINT_API sbint_status sbint_mc_estimate(const sbint_spec* spec,
                                         unsigned long long samples,
                                         unsigned long long seed,
                                         unsigned long long chunk_size, int threads,
                                         sbint_estimate* out);

/* Real n <= 2 or complex N = 1; tol >= 1e-12. */
SBINT_API sbint_status sbint_quadrature_estimate(const sbint_spec* spec, double tol,
                                                 double* out);

/* int_0^1 r^{effective_dim-1+power} (1-r^2)^q dr for q > -1. */
SBINT_API sbint_status sbint_radial_quadrature(double effective_dim, double power,
                                               double q, double tol, double* out);

/* Ball with -1 < q < 0: MC sphere factor x deterministic radial factor. */
SBINT_API sbint_status sbint_hybrid_estimate(const sbint_spec* spec,
                                             unsigned long long samples,
                                             unsigned long long seed,
                                             unsigned long long chunk_size,
                                             int threads, double tol,
                                             sbint_estimate* out);

/* -------------------------------------------------------------------- */
/* Asymptotics                                                          */
/* -------------------------------------------------------------------- */

/* Exact growth exponent e (reduced fraction) with value ~ t^e as the limit
 * variable t -> infinity, anchor factor excluded. SBINT_ERROR_UNSUPPORTED
 * for families without a catalog growth rate. */
SBINT_API sbint_status sbint_asymptotic_exponent(const sbint_spec* spec,
                                                 sbint_limit limit, long long* num,
                                                 long long* den);

/* max/min of value(t) t^{-e} / anchor^{p} over the probe points ts. */
SBINT_API sbint_status sbint_asymptote_ratio(const sbint_spec* spec,
                                             sbint_limit limit, const double* ts,
                                             size_t ts_len, double* ratio);

/* -------------------------------------------------------------------- */
/* Special functions                                                    */
/* -------------------------------------------------------------------- */

SBINT_API sbint_status sbint_log_gamma(double t, double* out);
SBINT_API sbint_status sbint_gamma(double t, double* out);
SBINT_API sbint_status sbint_log_pochhammer(double a, double b, double* out);
SBINT_API sbint_status sbint_pochhammer(double a, double b, double* out);
SBINT_API sbint_status sbint_log_beta(double a, double b, double* out);

/* -------------------------------------------------------------------- */
/* Diagnostics                                                          */
/* -------------------------------------------------------------------- */

/* Message for the last failing call on this thread ("" if none). */
SBINT_API const char* sbint_last_error(void);
SBINT_API const char* sbint_status_name(sbint_status status);
SBINT_API const char* sbint_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SBINT_H */
