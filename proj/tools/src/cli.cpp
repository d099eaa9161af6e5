#include "dunkl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "dunkl/bochner_solver.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/jacobi_m1.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/serialize.hpp"

namespace dunkl::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr std::array<const char*, 9> kRawNames = {"mu",   "nu0",  "nu1", "rho0", "rho1",
                                                  "tau0", "tau1", "xi",  "eta"};

struct RunConfig {
  std::optional<std::string> alpha, beta, c;
  std::map<std::string, std::string> raw;
  int N = 5;
  int order = 0;
  std::string format = "csv";
  std::string out_path;
  int samples = 101;
  double eps = 1e-6;
  std::string basis = "eigen";
  bool recurrence = false;
  bool extended = false;
};

bool family_mode(const RunConfig& cfg) { return cfg.alpha || cfg.beta || cfg.c; }

void require_single_mode(const RunConfig& cfg) {
  if (family_mode(cfg) && !cfg.raw.empty()) {
    throw UsageError("give either --alpha/--beta/--c or the raw operator parameters, not both");
  }
}

BigJacobiParams family_params(const RunConfig& cfg) {
  return {Rational::parse(cfg.alpha.value_or("0")), Rational::parse(cfg.beta.value_or("0")),
          Rational::parse(cfg.c.value_or("0"))};
}

OperatorParams operator_params(const RunConfig& cfg) {
  require_single_mode(cfg);
  if (family_mode(cfg)) return big_operator(family_params(cfg));
  OperatorParams p;
  Rational* fields[] = {&p.mu, &p.nu0, &p.nu1, &p.rho0, &p.rho1, &p.tau0, &p.tau1, &p.xi, &p.eta};
  for (std::size_t i = 0; i < kRawNames.size(); ++i) {
    if (auto it = cfg.raw.find(kRawNames[i]); it != cfg.raw.end()) {
      *fields[i] = Rational::parse(it->second);
    }
  }
  return p;
}

/// Positive weight for the configured operator: the family constructors in
/// family mode, the classifier's weight in raw mode.
WeightFunction positive_weight(const RunConfig& cfg) {
  require_single_mode(cfg);
  if (family_mode(cfg)) {
    const BigJacobiParams p = family_params(cfg);
    return p.c.is_zero() ? little_weight(p.alpha, p.beta) : big_weight(p);
  }
  const ClassificationVerdict v = classify(operator_params(cfg));
  if (!v.weight || !v.positive_on_symmetric_support) {
    throw UnsupportedWeight(std::string("operator is ") + std::string(to_string(v.case_tag)) +
                            " and has no positive weight on a symmetric support");
  }
  return *v.weight;
}

void require_format(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw UsageError("--format must be csv or json");
  }
}

void require_N(const RunConfig& cfg) {
  if (cfg.N < 0) throw UsageError("--N must be nonnegative");
}

QuadratureOptions quad_options(const RunConfig& cfg) { return {cfg.order, cfg.extended}; }

// Output sink: --out PATH or the caller's stream. Files are opened in binary
// mode so line endings stay LF.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_gen_poly(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  require_N(cfg);
  const DunklOperator op = DunklOperator::build(operator_params(cfg));
  const auto table = eigen_sequence(op, cfg.N);
  Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    *sink << to_json(table).dump(2) << '\n';
  } else {
    write_eigen_csv(*sink, table);
  }
  return kPass;
}

int cmd_eigenvalues(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  require_N(cfg);
  const OperatorParams p = operator_params(cfg);
  Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (int n = 0; n <= cfg.N; ++n) {
      arr.push_back({{"n", n}, {"lambda", eigenvalue(p, n).str()}, {"parity", n % 2 ? "odd" : "even"}});
    }
    *sink << arr.dump(2) << '\n';
  } else {
    *sink << "n,lambda,parity\n";
    for (int n = 0; n <= cfg.N; ++n) {
      *sink << n << ',' << eigenvalue(p, n).str() << ',' << (n % 2 ? "odd" : "even") << '\n';
    }
  }
  return kPass;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  const ClassificationVerdict v = classify(operator_params(cfg));
  Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    *sink << to_json(v).dump(2) << '\n';
  } else {
    *sink << format_verdict(v) << '\n';
  }
  return kPass;
}

int cmd_weight_sample(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  if (!(cfg.eps >= 0.0)) throw UsageError("--eps must be nonnegative");
  const WeightFunction w = positive_weight(cfg);
  std::vector<std::pair<double, double>> rows;
  for (const auto& iv : w.support) {
    const double lo = iv.lo + cfg.eps;
    const double hi = iv.hi - cfg.eps;
    if (!(lo < hi)) throw UsageError("--eps leaves an empty sampling interval");
    for (int i = 0; i < cfg.samples; ++i) {
      const double x = lo + (hi - lo) * i / (cfg.samples - 1);
      if (!w.evaluable_at(x)) continue;
      rows.emplace_back(x, w.value(x));
    }
  }
  Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [x, v] : rows) arr.push_back({{"x", x}, {"w", v}});
    *sink << Json{{"weight", to_json(w)}, {"samples", arr}}.dump(2) << '\n';
  } else {
    *sink << "x,w\n";
    for (const auto& [x, v] : rows) *sink << format_double(x) << ',' << format_double(v) << '\n';
  }
  return kPass;
}

std::vector<Polynomial> eigen_polys(const DunklOperator& op, int N) {
  std::vector<Polynomial> polys;
  for (auto& e : eigen_sequence(op, N)) polys.push_back(std::move(e.poly));
  return polys;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  require_N(cfg);
  if (cfg.basis != "eigen" && cfg.basis != "monomial") {
    throw UsageError("--basis must be eigen or monomial");
  }
  const WeightFunction w = positive_weight(cfg);
  const DunklOperator op = DunklOperator::build(operator_params(cfg));
  Sink sink(cfg.out_path, out);
  if (cfg.recurrence) {
    const auto table = recurrence_coefficients(w, eigen_polys(op, cfg.N), cfg.N, quad_options(cfg));
    if (cfg.format == "json") {
      *sink << to_json(table).dump(2) << '\n';
    } else {
      write_recurrence_csv(*sink, table);
    }
    return kPass;
  }
  std::vector<Polynomial> polys;
  GramBasis basis = GramBasis::Eigen;
  if (cfg.basis == "eigen") {
    polys = eigen_polys(op, cfg.N);
  } else {
    basis = GramBasis::Monomial;
    for (int k = 0; k <= cfg.N; ++k) polys.push_back(Polynomial::monomial(k));
  }
  const GramMatrix g = gram_matrix(w, polys, quad_options(cfg), basis);
  if (cfg.format == "json") {
    *sink << to_json(g).dump(2) << '\n';
  } else {
    write_gram_csv(*sink, g);
  }
  return kPass;
}

struct CheckRow {
  std::string name;
  bool passed = false;
  double value = 0;
  double threshold = 0;
};

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg);
  require_N(cfg);
  const WeightFunction w = positive_weight(cfg);
  const DunklOperator op = DunklOperator::build(operator_params(cfg));
  const auto table = eigen_sequence(op, cfg.N);
  std::vector<CheckRow> rows;

  // Exact eigen-residuals.
  int nonzero = 0;
  for (const auto& e : table) {
    if (!residual(op, e.poly, e.lambda).is_zero()) ++nonzero;
  }
  rows.push_back({"eigen_residual_exact", nonzero == 0, static_cast<double>(nonzero), 0.0});

  std::vector<Polynomial> polys;
  for (const auto& e : table) polys.push_back(e.poly);
  const GramMatrix g = gram_matrix(w, polys, quad_options(cfg), GramBasis::Eigen);
  const double off = g.max_normalized_offdiagonal();
  rows.push_back({"orthogonality", off <= 1e-10, off, 1e-10});
  const double hmin = g.min_diagonal();
  rows.push_back({"norms_positive", hmin > 0.0, hmin, 0.0});

  // Operator symmetry on monomial pairs.
  double worst_sym = 0;
  const int top = std::min(cfg.N, 10);
  for (int i = 0; i <= top; ++i) {
    for (int j = i + 1; j <= top; ++j) {
      const SymmetryTerms t = symmetry_terms(w, op, Polynomial::monomial(i), Polynomial::monomial(j),
                                             quad_options(cfg));
      worst_sym = std::max(worst_sym, std::abs(t.residual) / (std::abs(t.lhs) + std::abs(t.rhs) + 1.0));
    }
  }
  rows.push_back({"operator_symmetry", worst_sym <= 1e-10, worst_sym, 1e-10});

  // Pearson identities on a fixed interior grid of each positive-side interval.
  double worst_even = 0;
  double worst_flux = 0;
  for (const auto& iv : w.support) {
    if (iv.hi <= 0.0) continue;
    const double lo = std::max(iv.lo, 0.0);
    for (int k = 1; k <= 16; ++k) {
      const double x = lo + (iv.hi - lo) * k / 17.0;
      if (!w.in_support_interior(-x) || !w.evaluable_at(x) || !w.evaluable_at(-x)) continue;
      const PearsonResidual r = pearson_residual(w, op, x);
      worst_even = std::max(worst_even, r.relative_even());
      worst_flux = std::max(worst_flux, r.relative_flux());
    }
  }
  rows.push_back({"pearson_even", worst_even <= 1e-12, worst_even, 1e-12});
  rows.push_back({"pearson_flux", worst_flux <= 1e-12, worst_flux, 1e-12});

  const bool all = std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
  Sink sink(cfg.out_path, out);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"check", r.name}, {"status", r.passed ? "PASS" : "FAIL"},
                     {"value", r.value}, {"threshold", r.threshold}});
    }
    *sink << Json{{"passed", all}, {"checks", arr}}.dump(2) << '\n';
  } else {
    *sink << "check,status,value,threshold\n";
    for (const auto& r : rows) {
      *sink << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << format_double(r.value) << ','
            << format_double(r.threshold) << '\n';
    }
  }
  return all ? kPass : kCertificationFailed;
}

void add_parameter_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "family parameter alpha (p/q or decimal)");
  sub->add_option("--beta", cfg.beta, "family parameter beta");
  sub->add_option("--c", cfg.c, "family parameter c; 0 or omitted gives the little family");
  for (const char* name : kRawNames) {
    const std::string key = name;
    sub->add_option_function<std::string>(
        "--" + key, [&cfg, key](const std::string& v) { cfg.raw[key] = v; },
        "raw operator parameter " + key);
  }
  sub->add_option("--format", cfg.format, "csv or json");
  sub->add_option("--out", cfg.out_path, "output file (default stdout)");
}

void add_numeric_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--N", cfg.N, "highest degree");
  sub->add_option("--order", cfg.order, "quadrature nodes in y = x^2 (0 = automatic)");
  sub->add_flag("--extended", cfg.extended, "accumulate quadrature sums in long double");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dunkl-type operators with -1-Jacobi eigenpolynomials", "dunkl"};
  app.require_subcommand(1);

  using Handler = std::function<int(const RunConfig&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* gen = app.add_subcommand("gen-poly", "monic eigenpolynomials P_0..P_N and eigenvalues");
  add_parameter_options(gen, cfg);
  add_numeric_options(gen, cfg);
  commands.emplace_back(gen, cmd_gen_poly);

  auto* eig = app.add_subcommand("eigenvalues", "eigenvalues lambda_0..lambda_N");
  add_parameter_options(eig, cfg);
  add_numeric_options(eig, cfg);
  commands.emplace_back(eig, cmd_eigenvalues);

  auto* cls = app.add_subcommand("classify", "regime, positivity, and weight of an operator");
  add_parameter_options(cls, cfg);
  commands.emplace_back(cls, cmd_classify);

  auto* ws = app.add_subcommand("weight-sample", "samples of the weight over its support");
  add_parameter_options(ws, cfg);
  ws->add_option("--samples", cfg.samples, "points per support interval (>= 2)");
  ws->add_option("--eps", cfg.eps, "margin kept from the support endpoints");
  commands.emplace_back(ws, cmd_weight_sample);

  auto* gram = app.add_subcommand("gram", "Gram matrix or three-term recurrence table");
  add_parameter_options(gram, cfg);
  add_numeric_options(gram, cfg);
  gram->add_option("--basis", cfg.basis, "eigen or monomial");
  gram->add_flag("--recurrence", cfg.recurrence, "emit b_n, u_n, h_n instead of the matrix");
  commands.emplace_back(gram, cmd_gram);

  auto* cert = app.add_subcommand("certify", "full certification suite with a pass/fail table");
  add_parameter_options(cert, cfg);
  add_numeric_options(cert, cfg);
  commands.emplace_back(cert, cmd_certify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(cfg, out);
    }
  } catch (const DegenerateSpectrum& e) {
    err << "error: degenerate spectrum at n = " << e.index() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dunkl::cli
