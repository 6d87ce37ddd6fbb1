// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures. Criteria run against the core library; the determinism criterion
// also drives the installed CLI binary.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "errors.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "oracle.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"

using namespace sbint;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok && failure_detail_.empty()) failure_detail_ = detail;
    ok_ = ok_ && ok;
  }

  ~Criterion() {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok_ ? "PASS" : "FAIL",
                number_, title_.c_str(), elapsed / 1000.0,
                ok_ ? "" : " -- ", failure_detail_.c_str());
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string failure_detail_;
  std::chrono::steady_clock::time_point start_;
};

IntegralSpec make_spec(SpaceKind space, int dim, RegionKind region, Integrand g,
                       double q = 0.0, Measure measure = Measure::Standard) {
  IntegralSpec spec;
  spec.space = Space{space, dim};
  spec.region = region;
  spec.integrand = std::move(g);
  spec.q = q;
  spec.measure = measure;
  return spec;
}

MultiIndex random_alpha(std::mt19937_64& rng, int dim, unsigned max_entry,
                        unsigned long max_weight) {
  std::vector<unsigned> entries(static_cast<std::size_t>(dim), 0u);
  unsigned long weight = 0;
  for (auto& e : entries) {
    e = static_cast<unsigned>(rng() % (max_entry + 1));
    if (weight + e > max_weight) e = 0;
    weight += e;
  }
  return MultiIndex(std::move(entries));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void criterion_1_special_function_anchors() {
  Criterion c(1, "special-function anchors");
  for (int k = 1; k <= 170; ++k) {
    const double factorial =
        exact_factorial(static_cast<unsigned long>(k - 1)).to_double();
    const double got = sbint::gamma(double(k));
    c.expect(std::fabs(got - factorial) <= 1e-12 * factorial,
             "Gamma(" + std::to_string(k) + ") vs (k-1)!");
  }
  const double sqrt_pi = 1.7724538509055160273;
  c.expect(std::fabs(sbint::gamma(0.5) - sqrt_pi) <= 1e-14 * sqrt_pi, "Gamma(1/2)");
  for (long k = 0; k <= 20; ++k) {
    // (1)_k = Gamma(1+k)/Gamma(1) in exact arithmetic equals k! exactly.
    const ExactValue pochhammer_1k =
        exact_gamma_half_integer(2 + 2 * k) / exact_gamma_half_integer(2);
    c.expect(pochhammer_1k == exact_factorial(static_cast<unsigned long>(k)),
             "(1)_" + std::to_string(k));
  }
}

void criterion_2_gaussian_double_evaluation() {
  Criterion c(2, "Gaussian double-evaluation identity (J1/J2, K1/K2)");
  std::mt19937_64 rng(20240201);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const MultiIndex alpha = random_alpha(rng, n, 3, 6);
    const double p = uniform(rng, 0.0, 5.0);
    const double s = static_cast<double>(alpha.weight()) * p;
    const double j1 = evaluate(make_spec(SpaceKind::Real, n, RegionKind::GaussianSpace,
                                         Integrand::monomial(alpha, p)))
                          .log_value.log_magnitude;
    const double j2 = evaluate(make_spec(SpaceKind::Real, n, RegionKind::Sphere,
                                         Integrand::monomial(alpha, p)))
                          .log_value.log_magnitude;
    const double rhs = std::log(0.5) + j2 + log_gamma(0.5 * (n + s));
    c.expect(std::fabs(j1 - rhs) <= 1e-12, "real spec " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int N = 1 + static_cast<int>(rng() % 5);
    const MultiIndex alpha = random_alpha(rng, N, 3, 6);
    const double p = uniform(rng, 0.0, 5.0);
    const double s = static_cast<double>(alpha.weight()) * p;
    const double k1 = evaluate(make_spec(SpaceKind::Complex, N,
                                         RegionKind::GaussianSpace,
                                         Integrand::monomial(alpha, p)))
                          .log_value.log_magnitude;
    const double k2 = evaluate(make_spec(SpaceKind::Complex, N, RegionKind::Sphere,
                                         Integrand::monomial(alpha, p)))
                          .log_value.log_magnitude;
    const double rhs = std::log(0.5) + k2 + log_gamma(N + 0.5 * s);
    c.expect(std::fabs(k1 - rhs) <= 1e-12, "complex spec " + std::to_string(i));
  }
}

void criterion_3_oracle_concordance() {
  Criterion c(3, "Monte Carlo concordance, 200 specs x 1e6 samples");
  std::mt19937_64 rng(31337);
  const std::array<RegionKind, 3> regions{RegionKind::GaussianSpace,
                                          RegionKind::Sphere, RegionKind::Ball};
  int hits = 0;
  int total = 0;
  for (int i = 0; i < 200; ++i) {
    const bool complex_space = i % 2 == 1;
    const int dim = 1 + static_cast<int>(rng() % (complex_space ? 4u : 8u));
    const RegionKind region = regions[i % 3];
    const Measure measure = (i / 3) % 2 == 0 ? Measure::Standard : Measure::Normalized;
    const bool inner = (i / 6) % 2 == 1;
    const double p = uniform(rng, 0.0, 6.0);
    // Cover the q = 0 specializations (J4/J8/K4/K8) explicitly.
    const double q =
        region == RegionKind::Ball ? (i % 9 == 0 ? 0.0 : uniform(rng, 0.0, 5.0)) : 0.0;
    Integrand g = inner ? Integrand::inner_product(p, uniform(rng, 0.25, 2.0))
                        : Integrand::monomial(random_alpha(rng, dim, 3, 12), p);
    const auto spec = make_spec(complex_space ? SpaceKind::Complex : SpaceKind::Real,
                                dim, region, g, q, measure);
    const IntegralValue closed = evaluate(spec, EvalOptions{.want_exact = false});
    const Estimate est =
        mc_estimate(spec, OracleConfig{1000000, 7000 + static_cast<unsigned>(i), 65536},
                    0);
    ++total;
    if (est.standard_error == 0.0) {
      hits += std::fabs(est.mean - *closed.value) <=
                      1e-12 * std::fmax(1.0, std::fabs(*closed.value))
                  ? 1
                  : 0;
    } else {
      hits += std::fabs(est.mean - *closed.value) <= 4.0 * est.standard_error ? 1 : 0;
    }
  }
  c.expect(hits >= 198, "only " + std::to_string(hits) + "/200 within 4 SE");
}

void criterion_4_low_dimension_quadrature() {
  Criterion c(4, "deterministic quadrature concordance (n <= 2, N = 1)");
  std::vector<IntegralSpec> grid;
  for (const Measure measure : {Measure::Standard, Measure::Normalized}) {
    for (const double q : {-0.75, -0.5, -0.25, 0.0, 1.0, 2.5}) {
      grid.push_back(make_spec(SpaceKind::Real, 1, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({2}), 1.0), q, measure));
      grid.push_back(make_spec(SpaceKind::Real, 2, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({1, 2}), 1.6), q,
                               measure));
      grid.push_back(make_spec(SpaceKind::Real, 2, RegionKind::Ball,
                               Integrand::inner_product(2.4, 1.3), q, measure));
      grid.push_back(make_spec(SpaceKind::Complex, 1, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({2}), 1.5), q, measure));
    }
    grid.push_back(make_spec(SpaceKind::Real, 1, RegionKind::Sphere,
                             Integrand::monomial(MultiIndex({3}), 2.0), 0.0, measure));
    grid.push_back(make_spec(SpaceKind::Real, 2, RegionKind::Sphere,
                             Integrand::monomial(MultiIndex({2, 1}), 1.2), 0.0,
                             measure));
    grid.push_back(make_spec(SpaceKind::Complex, 1, RegionKind::Sphere,
                             Integrand::inner_product(3.1, 0.9), 0.0, measure));
    grid.push_back(make_spec(SpaceKind::Real, 2, RegionKind::GaussianSpace,
                             Integrand::monomial(MultiIndex({1, 3}), 1.1), 0.0,
                             measure));
    grid.push_back(make_spec(SpaceKind::Complex, 1, RegionKind::GaussianSpace,
                             Integrand::inner_product(2.6, 1.1), 0.0, measure));
  }
  c.expect(grid.size() >= 50, "grid too small");
  int idx = 0;
  for (const IntegralSpec& spec : grid) {
    const double got = quadrature_estimate(spec, 1e-10);
    const double want = *evaluate(spec).value;
    c.expect(std::fabs(got - want) <= 1e-9 * std::fmax(1e-300, std::fabs(want)),
             "grid spec " + std::to_string(idx));
    ++idx;
  }
}

void criterion_5_exact_spot_values() {
  Criterion c(5, "exact-form spot values (K7''', K3''', J6''', K2')");
  const IntegralValue k7 =
      evaluate(make_spec(SpaceKind::Complex, 2, RegionKind::Ball,
                         Integrand::inner_product(2.0, 1.0), 1.0, Measure::Normalized));
  c.expect(k7.exact.has_value() && k7.exact->to_string() == "1/12", "K7''' exact");
  c.expect(std::fabs(*k7.value - 1.0 / 12.0) <= 1e-12 / 12.0, "K7''' float");

  const IntegralValue k3 = evaluate(
      make_spec(SpaceKind::Complex, 2, RegionKind::Ball,
                Integrand::monomial(MultiIndex({1, 1}), 2.0), 1.0, Measure::Normalized));
  c.expect(k3.exact.has_value() && k3.exact->to_string() == "1/60", "K3''' exact");
  c.expect(std::fabs(*k3.value - 1.0 / 60.0) <= 1e-12 / 60.0, "K3''' float");

  const IntegralValue j6 =
      evaluate(make_spec(SpaceKind::Real, 2, RegionKind::Sphere,
                         Integrand::inner_product(2.0, 1.0), 0.0, Measure::Normalized));
  c.expect(j6.exact.has_value() && j6.exact->to_string() == "1/2", "J6''' exact");
  c.expect(std::fabs(*j6.value - 0.5) <= 1e-12, "J6''' float");

  const IntegralValue k2 = evaluate(
      make_spec(SpaceKind::Complex, 2, RegionKind::Sphere,
                Integrand::monomial(MultiIndex({1, 0}), 2.0), 0.0, Measure::Normalized));
  c.expect(k2.exact.has_value() && k2.exact->to_string() == "1/2", "K2' exact");
  c.expect(std::fabs(*k2.value - 0.5) <= 1e-12, "K2' float");

  for (const IntegralValue* v : {&k7, &k3, &j6, &k2}) {
    c.expect(std::fabs(v->exact->to_log().log_magnitude - v->log_value.log_magnitude) <=
                 1e-12,
             "exact/float log agreement");
  }
}

void criterion_6_measure_bridge() {
  Criterion c(6, "measure bridge: normalized x region measure = standard");
  std::mt19937_64 rng(606060);
  const std::array<RegionKind, 3> regions{RegionKind::GaussianSpace,
                                          RegionKind::Sphere, RegionKind::Ball};
  for (int i = 0; i < 100; ++i) {
    const bool complex_space = i % 2 == 1;
    const int dim = 1 + static_cast<int>(rng() % (complex_space ? 4u : 8u));
    const RegionKind region = regions[i % 3];
    const double q = region == RegionKind::Ball ? uniform(rng, -0.9, 5.0) : 0.0;
    const double p = uniform(rng, 0.0, 5.0);
    Integrand g = i % 5 == 0 ? Integrand::inner_product(p, uniform(rng, 0.3, 2.0))
                             : Integrand::monomial(random_alpha(rng, dim, 3, 12), p);
    const auto space = complex_space ? SpaceKind::Complex : SpaceKind::Real;
    const double std_log =
        evaluate(make_spec(space, dim, region, g, q)).log_value.log_magnitude;
    const double norm_log =
        evaluate(make_spec(space, dim, region, g, q, Measure::Normalized))
            .log_value.log_magnitude;
    const int real_dim = complex_space ? 2 * dim : dim;
    const double measure_log =
        region == RegionKind::Sphere
            ? sphere_surface(real_dim, Measure::Standard).log_value.log_magnitude
            : ball_volume(real_dim, Measure::Standard).log_value.log_magnitude;
    c.expect(std::fabs(norm_log + measure_log - std_log) <= 1e-12,
             "spec " + std::to_string(i));
  }
}

void criterion_7_asymptotics() {
  Criterion c(7, "asymptotic two-sided bounds over t in {1e3..1e6}");
  const std::vector<double> ts{1e3, 1e4, 1e5, 1e6};
  std::vector<std::pair<IntegralSpec, Limit>> cases;
  // q -> infinity: J3, J7, K3, K7 (and their normalized primes).
  cases.emplace_back(make_spec(SpaceKind::Real, 2, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({1, 1}), 2.0), 1.0),
                     Limit::QToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Real, 2, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({1, 1}), 2.0), 1.0,
                               Measure::Normalized),
                     Limit::QToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Real, 3, RegionKind::Ball,
                               Integrand::inner_product(1.5, 1.0), 1.0),
                     Limit::QToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Complex, 2, RegionKind::Ball,
                               Integrand::monomial(MultiIndex({2, 1}), 2.0), 1.0),
                     Limit::QToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Complex, 1, RegionKind::Ball,
                               Integrand::inner_product(3.0, 1.0), 1.0,
                               Measure::Normalized),
                     Limit::QToInfinity);
  // p -> infinity: J6, J7, J8, K6, K7, K8.
  cases.emplace_back(make_spec(SpaceKind::Real, 4, RegionKind::Sphere,
                               Integrand::inner_product(2.0, 1.0)),
                     Limit::PToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Real, 3, RegionKind::Ball,
                               Integrand::inner_product(2.0, 1.0), 1.5),
                     Limit::PToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Real, 2, RegionKind::Ball,
                               Integrand::inner_product(2.0, 1.0), 0.0,
                               Measure::Normalized),
                     Limit::PToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Complex, 3, RegionKind::Sphere,
                               Integrand::inner_product(2.0, 1.0), 0.0,
                               Measure::Normalized),
                     Limit::PToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Complex, 2, RegionKind::Ball,
                               Integrand::inner_product(2.0, 1.0), 0.5),
                     Limit::PToInfinity);
  cases.emplace_back(make_spec(SpaceKind::Complex, 3, RegionKind::Ball,
                               Integrand::inner_product(2.0, 1.0), 0.0),
                     Limit::PToInfinity);

  int idx = 0;
  for (const auto& [spec, limit] : cases) {
    const double ratio = asymptote_ratio(spec, limit, ts);
    c.expect(std::isfinite(ratio) && ratio <= 4.0,
             "case " + std::to_string(idx) + " ratio " + std::to_string(ratio));
    ++idx;
  }
}

void criterion_8_zero_by_symmetry() {
  Criterion c(8, "zero by symmetry for signed monomials");
  std::mt19937_64 rng(808080);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 3; ++trial) {
      MultiIndex alpha = random_alpha(rng, n, 3, 9);
      alpha.entries[static_cast<std::size_t>(trial % n)] |= 1u;  // force an odd entry
      for (RegionKind region : {RegionKind::Sphere, RegionKind::Ball}) {
        const auto spec = make_spec(SpaceKind::Real, n, region,
                                    Integrand::signed_monomial(alpha));
        const IntegralValue v = evaluate(spec);
        c.expect(v.zero && *v.value == 0.0 && v.exact->is_zero(),
                 "exact zero, n=" + std::to_string(n));
        const Estimate est = mc_estimate(
            spec, OracleConfig{100000, 4242 + static_cast<unsigned>(n), 16384});
        c.expect(std::fabs(est.mean) <= 4.0 * est.standard_error,
                 "MC zero bracket, n=" + std::to_string(n));
      }
    }
  }
}

std::string run_command(const std::string& cmd, int& exit_code) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_9_determinism() {
  Criterion c(9, "bit-identical check output across runs and thread counts");
  // Core level: serial vs chunk-parallel reductions.
  const auto spec = make_spec(SpaceKind::Complex, 2, RegionKind::Ball,
                              Integrand::inner_product(2.0, 1.0), 1.0,
                              Measure::Normalized);
  const OracleConfig config{400000, 20240810, 8192};
  const Estimate serial = mc_estimate(spec, config, 1);
  const Estimate parallel = mc_estimate(spec, config, 4);
  c.expect(serial.mean == parallel.mean && serial.standard_error == parallel.standard_error,
           "core serial vs parallel");

  // CLI level: identical bytes for repeated runs and for threads 1 vs 3.
  const std::string base =
      std::string(SBINT_CLI_PATH) +
      " check --space real --dim 3 --region ball --alpha 2,0,1 --p 2 --q 1 "
      "--samples 300000 --seed 42 --chunk-size 65536";
  int rc1 = 0, rc2 = 0, rc3 = 0;
  const std::string out1 = run_command(base + " --threads 1", rc1);
  const std::string out2 = run_command(base + " --threads 1", rc2);
  const std::string out3 = run_command(base + " --threads 3", rc3);
  c.expect(rc1 == 0 && rc2 == 0 && rc3 == 0, "CLI check exit codes");
  c.expect(!out1.empty() && out1 == out2, "repeated runs differ");
  c.expect(out1 == out3, "serial vs chunk-parallel CLI output differs");
}

}  // namespace

int main() {
  std::printf("sbint acceptance suite\n");
  criterion_1_special_function_anchors();
  criterion_2_gaussian_double_evaluation();
  criterion_3_oracle_concordance();
  criterion_4_low_dimension_quadrature();
  criterion_5_exact_spot_values();
  criterion_6_measure_bridge();
  criterion_7_asymptotics();
  criterion_8_zero_by_symmetry();
  criterion_9_determinism();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
