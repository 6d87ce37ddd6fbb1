// sbint command line: eval / check / table / asymptote over the sbint C API.
//
// Output is one JSON object per line by default (--format text for a human
// rendering); floats are printed with 17 significant digits so that parsing
// the echoed spec and re-evaluating reproduces log_value bit for bit.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <sbint/sbint.h>

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr double kVerifyPoints[4] = {1e3, 1e4, 1e5, 1e6};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

[[noreturn]] void usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(2);
}

void check_status(sbint_status status) {
  if (status != SBINT_OK) {
    std::fprintf(stderr, "error (%s): %s\n", sbint_status_name(status),
                 sbint_last_error());
    std::exit(2);
  }
}

// ---------------------------------------------------------------------
// Spec flags shared by eval / check
// ---------------------------------------------------------------------

struct SpecArgs {
  std::string space = "real";
  int dim = 0;
  std::string region;
  std::string alpha_str;
  bool inner_product = false;
  bool signed_monomial = false;
  std::optional<double> p;
  std::optional<double> q;
  double anchor_norm = 1.0;
  std::string measure = "lebesgue";
};

void add_spec_flags(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--space", args.space, "real or complex")
      ->check(CLI::IsMember({"real", "complex"}));
  cmd->add_option("--dim", args.dim, "n for real spaces, N for complex")->required();
  cmd->add_option("--region", args.region, "gaussian, sphere, or ball")
      ->required()
      ->check(CLI::IsMember({"gaussian", "sphere", "ball"}));
  cmd->add_option("--alpha", args.alpha_str,
                  "comma-separated nonnegative integers, e.g. 2,1,0");
  cmd->add_flag("--inner-product", args.inner_product,
                "integrate |<x,y>|^p instead of a monomial");
  cmd->add_flag("--signed", args.signed_monomial,
                "integrate x^alpha without absolute values (real only)");
  cmd->add_option("--p", args.p, "integrand exponent p >= 0");
  cmd->add_option("--q", args.q, "radial weight exponent (ball only, q > -1)");
  cmd->add_option("--anchor-norm", args.anchor_norm,
                  "|y| (real) or |w| (complex) for inner products")
      ->capture_default_str();
  cmd->add_option("--measure", args.measure, "lebesgue or normalized")
      ->check(CLI::IsMember({"lebesgue", "normalized"}));
}

std::vector<unsigned> parse_alpha(const std::string& s) {
  std::vector<unsigned> alpha;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string token = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      usage_error("--alpha entries must be nonnegative integers, got '" + token + "'");
    }
    alpha.push_back(static_cast<unsigned>(std::strtoul(token.c_str(), nullptr, 10)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return alpha;
}

struct SpecHandle {
  sbint_spec* spec = nullptr;
  ~SpecHandle() { sbint_spec_destroy(spec); }
};

void build_spec(const SpecArgs& args, SpecHandle& handle) {
  if (args.inner_product && args.signed_monomial) {
    usage_error("--inner-product and --signed are mutually exclusive");
  }
  if (args.q.has_value() && args.region != "ball") {
    usage_error("--q applies to ball regions only");
  }

  handle.spec = sbint_spec_create(
      args.space == "complex" ? SBINT_SPACE_COMPLEX : SBINT_SPACE_REAL, args.dim);
  if (handle.spec == nullptr) usage_error("out of memory");

  sbint_region region = SBINT_REGION_SPHERE;
  if (args.region == "gaussian") region = SBINT_REGION_GAUSSIAN;
  if (args.region == "ball") region = SBINT_REGION_BALL;
  check_status(sbint_spec_set_region(handle.spec, region, args.q.value_or(0.0)));
  check_status(sbint_spec_set_measure(handle.spec, args.measure == "normalized"
                                                       ? SBINT_MEASURE_NORMALIZED
                                                       : SBINT_MEASURE_LEBESGUE));

  if (args.inner_product) {
    if (!args.alpha_str.empty()) usage_error("--alpha does not apply to inner products");
    if (!args.p.has_value()) usage_error("--p is required for inner products");
    check_status(sbint_spec_set_inner_product(handle.spec, *args.p, args.anchor_norm));
  } else if (args.signed_monomial) {
    if (args.alpha_str.empty()) usage_error("--alpha is required for signed monomials");
    if (args.p.has_value()) usage_error("--p does not apply to signed monomials");
    const auto alpha = parse_alpha(args.alpha_str);
    check_status(
        sbint_spec_set_signed_monomial(handle.spec, alpha.data(), alpha.size()));
  } else {
    if (args.alpha_str.empty()) usage_error("--alpha is required for monomials");
    if (!args.p.has_value()) usage_error("--p is required for monomials");
    const auto alpha = parse_alpha(args.alpha_str);
    check_status(
        sbint_spec_set_monomial(handle.spec, alpha.data(), alpha.size(), *args.p));
  }
}

// ---------------------------------------------------------------------
// Record rendering
// ---------------------------------------------------------------------

// Echo of the spec plus the evaluation outputs. Optional slots render as
// JSON null (alpha for inner products, p for signed monomials, q outside
// ball regions, value on overflow, log_value for exact zeros).
struct Record {
  std::string family;
  std::string space;
  int dim = 0;
  std::optional<std::vector<unsigned>> alpha;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> anchor_norm;
  std::string measure;
  std::optional<double> value;
  std::optional<double> log_value;
  std::optional<std::string> exact;
};

Record make_record(const SpecArgs& args, const sbint_result* result) {
  Record rec;
  rec.family = sbint_result_family(result);
  rec.space = args.space;
  rec.dim = args.dim;
  if (!args.inner_product) rec.alpha = parse_alpha(args.alpha_str);
  if (!args.signed_monomial) rec.p = args.p;
  if (args.region == "ball") rec.q = args.q.value_or(0.0);
  if (args.inner_product) rec.anchor_norm = args.anchor_norm;
  rec.measure = args.measure;
  const bool zero = sbint_result_is_zero(result) != 0;
  if (zero) {
    rec.value = 0.0;
  } else {
    if (sbint_result_has_value(result)) rec.value = sbint_result_value(result);
    rec.log_value = sbint_result_log_value(result);
  }
  if (const char* exact = sbint_result_exact(result)) rec.exact = exact;
  return rec;
}

std::string alpha_to_string(const std::vector<unsigned>& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(alpha[i]);
  }
  return out;
}

std::string record_spec_fields_json(const Record& rec) {
  std::string out;
  out += "\"family\":" + json_quote(rec.family);
  out += ",\"space\":" + json_quote(rec.space);
  out += ",\"dim\":" + std::to_string(rec.dim);
  out += ",\"alpha\":";
  if (rec.alpha.has_value()) {
    out.push_back('[');
    for (std::size_t i = 0; i < rec.alpha->size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string((*rec.alpha)[i]);
    }
    out.push_back(']');
  } else {
    out += "null";
  }
  out += ",\"p\":" + (rec.p ? fmt17(*rec.p) : "null");
  out += ",\"q\":" + (rec.q ? fmt17(*rec.q) : "null");
  out += ",\"anchor_norm\":" + (rec.anchor_norm ? fmt17(*rec.anchor_norm) : "null");
  out += ",\"measure\":" + json_quote(rec.measure);
  return out;
}

std::string record_to_json(const Record& rec) {
  std::string out = "{" + record_spec_fields_json(rec);
  out += ",\"value\":" + (rec.value ? fmt17(*rec.value) : "null");
  out += ",\"log_value\":" + (rec.log_value ? fmt17(*rec.log_value) : "null");
  out += ",\"exact\":" + (rec.exact ? json_quote(*rec.exact) : "null");
  out += "}";
  return out;
}

void print_record_text(const Record& rec) {
  std::printf("family:    %s\n", rec.family.c_str());
  if (rec.value.has_value()) {
    std::printf("value:     %s\n", fmt17(*rec.value).c_str());
  } else {
    std::printf("value:     overflow\n");
  }
  if (rec.log_value.has_value()) {
    std::printf("log_value: %s\n", fmt17(*rec.log_value).c_str());
  }
  if (rec.exact.has_value()) {
    std::printf("exact:     %s\n", rec.exact->c_str());
  }
}

// ---------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------

int run_eval(const SpecArgs& args, const std::string& format) {
  SpecHandle handle;
  build_spec(args, handle);
  sbint_result* result = nullptr;
  check_status(sbint_evaluate(handle.spec, 1, &result));
  const Record rec = make_record(args, result);
  sbint_result_destroy(result);
  if (format == "json") {
    std::printf("%s\n", record_to_json(rec).c_str());
  } else {
    print_record_text(rec);
  }
  return 0;
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

struct CheckArgs {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 65536;
  int threads = 1;
  double tol = 1e-9;
  std::string method = "auto";
};

int run_check(const SpecArgs& args, const CheckArgs& check, const std::string& format) {
  SpecHandle handle;
  build_spec(args, handle);

  sbint_result* result = nullptr;
  check_status(sbint_evaluate(handle.spec, 0, &result));
  const bool zero = sbint_result_is_zero(result) != 0;
  if (!zero && !sbint_result_has_value(result)) {
    sbint_result_destroy(result);
    usage_error("closed form exceeds the double range; nothing to check against");
  }
  const double closed = zero ? 0.0 : sbint_result_value(result);
  const double closed_log = sbint_result_log_value(result);
  const std::string family = sbint_result_family(result);
  sbint_result_destroy(result);

  std::string method = check.method;
  if (method == "auto") {
    method = (args.region == "ball" && args.q.value_or(0.0) < 0.0) ? "hybrid" : "mc";
  }

  double estimate = 0.0;
  double standard_error = 0.0;
  std::optional<double> z;
  std::optional<double> rel_err;
  bool pass = false;

  if (method == "quadrature") {
    check_status(sbint_quadrature_estimate(handle.spec, check.tol, &estimate));
    const double scale = std::max(std::fabs(closed), 1e-300);
    rel_err = std::fabs(estimate - closed) / scale;
    pass = closed == 0.0 ? std::fabs(estimate) <= check.tol : *rel_err <= check.tol;
  } else {
    sbint_estimate est{};
    if (method == "hybrid") {
      check_status(sbint_hybrid_estimate(handle.spec, check.samples, check.seed,
                                         check.chunk_size, check.threads, check.tol,
                                         &est));
    } else if (method == "mc") {
      check_status(sbint_mc_estimate(handle.spec, check.samples, check.seed,
                                     check.chunk_size, check.threads, &est));
    } else {
      usage_error("unknown method '" + method + "'");
    }
    estimate = est.mean;
    standard_error = est.standard_error;
    if (standard_error > 0.0) {
      z = (estimate - closed) / standard_error;
      pass = std::fabs(*z) <= 4.0;
    } else {
      // Constant integrand: the estimate must match exactly.
      const bool equal =
          std::fabs(estimate - closed) <= 1e-12 * std::max(1.0, std::fabs(closed));
      z = equal ? 0.0 : std::numeric_limits<double>::infinity();
      pass = equal;
    }
  }

  Record rec = make_record(args, nullptr);
  rec.family = family;  // make_record needs a result; fill spec echo manually
  if (format == "json") {
    std::string out = "{" + record_spec_fields_json(rec);
    out += ",\"method\":" + json_quote(method);
    out += ",\"samples\":" + std::to_string(check.samples);
    out += ",\"seed\":" + std::to_string(check.seed);
    out += ",\"chunk_size\":" + std::to_string(check.chunk_size);
    out += ",\"closed_value\":" + fmt17(closed);
    out += ",\"closed_log_value\":" + (zero ? "null" : fmt17(closed_log));
    out += ",\"estimate\":" + fmt17(estimate);
    out += ",\"standard_error\":" + fmt17(standard_error);
    out += ",\"z\":" + (z && std::isfinite(*z) ? fmt17(*z) : "null");
    out += ",\"rel_err\":" + (rel_err ? fmt17(*rel_err) : "null");
    out += std::string(",\"pass\":") + (pass ? "true" : "false");
    out += "}";
    std::printf("%s\n", out.c_str());
  } else {
    std::printf("family:         %s\n", family.c_str());
    std::printf("method:         %s\n", method.c_str());
    std::printf("closed_value:   %s\n", fmt17(closed).c_str());
    std::printf("estimate:       %s\n", fmt17(estimate).c_str());
    std::printf("standard_error: %s\n", fmt17(standard_error).c_str());
    if (z && std::isfinite(*z)) std::printf("z:              %s\n", fmt17(*z).c_str());
    if (rel_err) std::printf("rel_err:        %s\n", fmt17(*rel_err).c_str());
    std::printf("result:         %s\n", pass ? "PASS" : "FAIL");
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------
// Family labels (table / asymptote)
// ---------------------------------------------------------------------

struct Family {
  bool complex_space = false;
  int index = 1;      // 1..8
  int primes = 0;     // 0..3
  std::string label;  // normalized rendering, primes as '

  bool inner() const { return index >= 5; }
  bool gaussian() const { return index == 1 || index == 5; }
  bool sphere() const { return index == 2 || index == 6; }
  bool ball() const { return index == 3 || index == 4 || index == 7 || index == 8; }
  bool has_q_param() const { return index == 3 || index == 7; }
  bool normalized() const { return primes % 2 == 1; }
  bool integer_params() const { return primes >= 2; }
};

Family parse_family(const std::string& name) {
  Family fam;
  if (name.size() < 2 || (name[0] != 'J' && name[0] != 'K') || name[1] < '1' ||
      name[1] > '8') {
    usage_error("unknown family '" + name + "' (expected J1..J8 or K1..K8 with 0-3 primes)");
  }
  fam.complex_space = name[0] == 'K';
  fam.index = name[1] - '0';
  const std::string suffix = name.substr(2);
  if (!suffix.empty() && suffix != std::string(suffix.size(), '\'') &&
      suffix != std::string(suffix.size(), 'p')) {
    usage_error("unknown family suffix '" + suffix + "' (use ' or p for primes)");
  }
  if (suffix.size() > 3) usage_error("at most three primes in '" + name + "'");
  fam.primes = static_cast<int>(suffix.size());
  fam.label = name.substr(0, 2) + std::string(static_cast<std::size_t>(fam.primes), '\'');
  return fam;
}

// ---------------------------------------------------------------------
// table
// ---------------------------------------------------------------------

std::vector<long> parse_int_range(const std::string& s, const char* flag) {
  std::vector<long> out;
  const std::size_t dots = s.find("..");
  if (dots != std::string::npos) {
    char* end = nullptr;
    const long lo = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + dots) usage_error(std::string(flag) + ": bad range '" + s + "'");
    const char* hi_str = s.c_str() + dots + 2;
    const long hi = std::strtol(hi_str, &end, 10);
    if (*end != '\0' || end == hi_str) {
      usage_error(std::string(flag) + ": bad range '" + s + "'");
    }
    for (long v = lo; v <= hi; ++v) out.push_back(v);  // lo > hi: empty
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string token = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (token.empty() || *end != '\0') {
      usage_error(std::string(flag) + ": bad integer '" + token + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* flag) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string token = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || *end != '\0') {
      usage_error(std::string(flag) + ": bad number '" + token + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

struct TableArgs {
  std::string family;
  std::string dim_str;
  std::string alpha_str;
  std::string m_str;
  std::string k_str;
  std::string p_str;
  std::string q_str;
  double anchor_norm = 1.0;
};

int run_table(const TableArgs& args) {
  const Family fam = parse_family(args.family);

  const std::vector<long> dims = parse_int_range(args.dim_str, "--dim");
  std::vector<unsigned> alpha;
  if (!fam.inner()) {
    if (args.alpha_str.empty()) {
      usage_error("--alpha is required for the monomial families (index 1..4)");
    }
    alpha = parse_alpha(args.alpha_str);
    if (dims.size() > 1) {
      usage_error("monomial tables need a single --dim matching the alpha length");
    }
  }

  std::vector<double> p_values;
  std::vector<double> q_values{0.0};
  if (fam.integer_params()) {
    if (args.m_str.empty()) usage_error("--m is required for integer-parameter families");
    for (long m : parse_int_range(args.m_str, "--m")) {
      if (m < 0) usage_error("--m values must be >= 0");
      p_values.push_back(2.0 * static_cast<double>(m));
    }
    if (fam.has_q_param()) {
      if (args.k_str.empty()) usage_error("--k is required for this family");
      q_values.clear();
      for (long k : parse_int_range(args.k_str, "--k")) {
        if (k < 0) usage_error("--k values must be >= 0");
        q_values.push_back(static_cast<double>(k));
      }
    }
  } else {
    if (args.p_str.empty()) usage_error("--p is required for this family");
    p_values = parse_double_list(args.p_str, "--p");
    if (fam.has_q_param()) {
      if (args.q_str.empty()) usage_error("--q is required for this family");
      q_values = parse_double_list(args.q_str, "--q");
    }
  }

  std::printf("family,n_or_N,alpha,p,q,anchor_norm,measure,value,log_value,exact\n");
  const std::string measure_name = fam.normalized() ? "normalized" : "lebesgue";

  for (long dim : dims) {
    for (double p : p_values) {
      for (double q : q_values) {
        SpecHandle handle;
        handle.spec = sbint_spec_create(
            fam.complex_space ? SBINT_SPACE_COMPLEX : SBINT_SPACE_REAL,
            static_cast<int>(dim));
        if (handle.spec == nullptr) usage_error("out of memory");
        sbint_region region = SBINT_REGION_SPHERE;
        if (fam.gaussian()) region = SBINT_REGION_GAUSSIAN;
        if (fam.ball()) region = SBINT_REGION_BALL;
        check_status(sbint_spec_set_region(handle.spec, region, q));
        check_status(sbint_spec_set_measure(handle.spec,
                                            fam.normalized() ? SBINT_MEASURE_NORMALIZED
                                                             : SBINT_MEASURE_LEBESGUE));
        if (fam.inner()) {
          check_status(sbint_spec_set_inner_product(handle.spec, p, args.anchor_norm));
        } else {
          check_status(
              sbint_spec_set_monomial(handle.spec, alpha.data(), alpha.size(), p));
        }

        sbint_result* result = nullptr;
        check_status(sbint_evaluate(handle.spec, 1, &result));
        const bool zero = sbint_result_is_zero(result) != 0;

        std::string row = csv_field(fam.label);
        row += "," + std::to_string(dim);
        row += "," + csv_field(fam.inner() ? "" : alpha_to_string(alpha));
        row += "," + fmt17(p);
        row += "," + (fam.ball() ? fmt17(q) : "");
        row += "," + (fam.inner() ? fmt17(args.anchor_norm) : "");
        row += "," + measure_name;
        if (zero) {
          row += ",0,,";
        } else {
          row += ",";
          if (sbint_result_has_value(result)) row += fmt17(sbint_result_value(result));
          row += "," + fmt17(sbint_result_log_value(result)) + ",";
        }
        if (const char* exact = sbint_result_exact(result)) {
          row += csv_field(exact);
        }
        sbint_result_destroy(result);
        std::printf("%s\n", row.c_str());
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------
// asymptote
// ---------------------------------------------------------------------

struct AsymptoteArgs {
  std::string family;
  int dim = 0;
  std::string alpha_str;
  std::optional<double> p;
  std::optional<double> q;
  double anchor_norm = 1.0;
  std::string limit;
  bool verify = false;
};

int run_asymptote(const AsymptoteArgs& args, const std::string& format) {
  const Family fam = parse_family(args.family);
  const sbint_limit limit = args.limit == "p" ? SBINT_LIMIT_P : SBINT_LIMIT_Q;

  SpecHandle handle;
  handle.spec = sbint_spec_create(
      fam.complex_space ? SBINT_SPACE_COMPLEX : SBINT_SPACE_REAL, args.dim);
  if (handle.spec == nullptr) usage_error("out of memory");

  // The limit variable itself gets a valid placeholder; the exponent only
  // reads the fixed parameters.
  double q = args.q.value_or(fam.has_q_param() ? 1.0 : 0.0);
  if (limit == SBINT_LIMIT_Q) q = args.q.value_or(1.0);
  sbint_region region = SBINT_REGION_SPHERE;
  if (fam.gaussian()) region = SBINT_REGION_GAUSSIAN;
  if (fam.ball()) region = SBINT_REGION_BALL;
  check_status(sbint_spec_set_region(handle.spec, region, q));
  check_status(sbint_spec_set_measure(handle.spec, fam.normalized()
                                                       ? SBINT_MEASURE_NORMALIZED
                                                       : SBINT_MEASURE_LEBESGUE));

  const double p = args.p.value_or(2.0);
  std::vector<unsigned> alpha;
  if (fam.inner()) {
    check_status(sbint_spec_set_inner_product(handle.spec, p, args.anchor_norm));
  } else {
    if (args.alpha_str.empty()) {
      usage_error("--alpha is required for the monomial families");
    }
    alpha = parse_alpha(args.alpha_str);
    check_status(sbint_spec_set_monomial(handle.spec, alpha.data(), alpha.size(), p));
  }

  long long num = 0;
  long long den = 1;
  check_status(sbint_asymptotic_exponent(handle.spec, limit, &num, &den));
  const std::string exponent =
      den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);

  std::optional<double> ratio;
  if (args.verify) {
    double r = 0.0;
    check_status(sbint_asymptote_ratio(handle.spec, limit, kVerifyPoints, 4, &r));
    ratio = r;
  }

  if (format == "json") {
    std::string out = "{\"family\":" + json_quote(fam.label);
    out += ",\"limit\":" + json_quote(args.limit);
    out += ",\"dim\":" + std::to_string(args.dim);
    out += ",\"alpha\":";
    if (fam.inner()) {
      out += "null";
    } else {
      out.push_back('[');
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(alpha[i]);
      }
      out.push_back(']');
    }
    out += ",\"p\":" + (limit == SBINT_LIMIT_P ? "null" : fmt17(p));
    out += ",\"q\":" + (limit == SBINT_LIMIT_Q || !fam.ball() ? "null" : fmt17(q));
    out += ",\"anchor_norm\":" + (fam.inner() ? fmt17(args.anchor_norm) : "null");
    out += ",\"exponent\":" + json_quote(exponent);
    out += ",\"exponent_value\":" +
           fmt17(static_cast<double>(num) / static_cast<double>(den));
    out += ",\"ratio\":" + (ratio ? fmt17(*ratio) : "null");
    out += "}";
    std::printf("%s\n", out.c_str());
  } else {
    std::printf("family:   %s\n", fam.label.c_str());
    std::printf("limit:    %s -> infinity\n", args.limit.c_str());
    std::printf("exponent: %s\n", exponent.c_str());
    if (ratio) std::printf("ratio:    %s over t in {1e3,1e4,1e5,1e6}\n", fmt17(*ratio).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sbint: integrals of |x^alpha|^p and |<x,y>|^p over spheres, "
               "balls, and Gaussian-weighted space in R^n and C^N"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 0;
  if (const char* env = std::getenv("SBINT_SEED")) {
    default_seed = std::strtoull(env, nullptr, 10);
  }

  std::string format = "json";
  app.add_option("--format", format, "json (one object per line) or text")
      ->check(CLI::IsMember({"json", "text"}));

  SpecArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a closed form");
  add_spec_flags(eval_cmd, eval_args);

  SpecArgs check_spec_args;
  CheckArgs check_args;
  check_args.seed = default_seed;
  CLI::App* check_cmd =
      app.add_subcommand("check", "verify a closed form against an oracle");
  add_spec_flags(check_cmd, check_spec_args);
  check_cmd->add_option("--samples", check_args.samples, "Monte Carlo sample count")
      ->capture_default_str();
  check_cmd->add_option("--seed", check_args.seed, "RNG seed (default: $SBINT_SEED or 0)");
  check_cmd->add_option("--chunk-size", check_args.chunk_size,
                        "samples per RNG chunk (part of the reproducibility contract)")
      ->capture_default_str();
  check_cmd->add_option("--threads", check_args.threads,
                        "worker threads (never changes the estimate)")
      ->capture_default_str();
  check_cmd->add_option("--tol", check_args.tol, "quadrature relative tolerance")
      ->capture_default_str();
  check_cmd->add_option("--method", check_args.method, "auto, mc, quadrature, or hybrid")
      ->check(CLI::IsMember({"auto", "mc", "quadrature", "hybrid"}));

  TableArgs table_args;
  CLI::App* table_cmd = app.add_subcommand("table", "CSV catalog of one family");
  table_cmd->add_option("--family", table_args.family, "J1..K8 with 0-3 primes (' or p)")
      ->required();
  table_cmd->add_option("--dim", table_args.dim_str, "dimension range, e.g. 2 or 1..3")
      ->required();
  table_cmd->add_option("--alpha", table_args.alpha_str, "multi-index (monomial families)");
  table_cmd->add_option("--m", table_args.m_str, "half-exponent range (p = 2m families)");
  table_cmd->add_option("--k", table_args.k_str, "integer weight range (q = k families)");
  table_cmd->add_option("--p", table_args.p_str, "comma-separated p values");
  table_cmd->add_option("--q", table_args.q_str, "comma-separated q values");
  table_cmd->add_option("--anchor-norm", table_args.anchor_norm,
                        "anchor norm for inner-product families")
      ->capture_default_str();

  AsymptoteArgs asy_args;
  CLI::App* asy_cmd =
      app.add_subcommand("asymptote", "growth exponent as q or p goes to infinity");
  asy_cmd->add_option("--family", asy_args.family, "J3, J6..J8, K3, K6..K8 (primes allowed)")
      ->required();
  asy_cmd->add_option("--dim", asy_args.dim, "n for real, N for complex")->required();
  asy_cmd->add_option("--alpha", asy_args.alpha_str, "multi-index (J3/K3)");
  asy_cmd->add_option("--p", asy_args.p, "fixed p (q -> infinity families)");
  asy_cmd->add_option("--q", asy_args.q, "fixed q (p -> infinity ball families)");
  asy_cmd->add_option("--anchor-norm", asy_args.anchor_norm, "anchor norm")
      ->capture_default_str();
  asy_cmd->add_option("--limit", asy_args.limit, "q or p")
      ->required()
      ->check(CLI::IsMember({"q", "p"}));
  asy_cmd->add_flag("--verify", asy_args.verify,
                    "also report max/min of value(t) t^{-e} over t in {1e3..1e6}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval_cmd->parsed()) return run_eval(eval_args, format);
  if (check_cmd->parsed()) return run_check(check_spec_args, check_args, format);
  if (table_cmd->parsed()) return run_table(table_args);
  if (asy_cmd->parsed()) return run_asymptote(asy_args, format);
  return 2;
}
