#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "dunkl/bochner_solver.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/gauss_jacobi.hpp"
#include "dunkl/jacobi_m1.hpp"

namespace dunkl {

namespace {

long double exact_or(const std::optional<Rational>& exact, double fallback) {
  return exact ? exact->to_long_double() : static_cast<long double>(fallback);
}

void check_weight(const WeightFunction& w) {
  if (!w.jacobi) {
    throw UnsupportedWeight(
        "quadrature supports only big and little -1-Jacobi weights (positive regimes)");
  }
  if (!(w.constant > 0.0)) throw UnsupportedWeight("weight has a non-positive constant factor");
  const auto& j = *w.jacobi;
  if (!(j.alpha > -1.0) || !(j.beta > -1.0)) {
    throw NonIntegrable("weight is not integrable: alpha and beta must exceed -1");
  }
  if (!(j.c >= 0.0 && j.c < 1.0)) throw UnsupportedWeight("c must lie in [0,1)");
  if (!(w.variable_scale != 0.0) || !std::isfinite(w.variable_scale)) {
    throw UnsupportedWeight("weight has a degenerate variable scale");
  }
}

int default_order(int degree_sum) { return std::max(40, degree_sum + 10); }

template <class Real>
Real dot(const std::vector<long double>& weights, const std::vector<long double>& a,
         const std::vector<long double>& b) {
  Real s = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    s += static_cast<Real>(weights[i]) * static_cast<Real>(a[i]) * static_cast<Real>(b[i]);
  }
  return s;
}

double weighted_dot(const QuadratureRule& rule, const std::vector<long double>& a,
                    const std::vector<long double>& b, bool extended) {
  if (extended) return static_cast<double>(dot<long double>(rule.weights_ext, a, b));
  double s = 0;
  for (std::size_t i = 0; i < rule.weights.size(); ++i) {
    s += rule.weights[i] * static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return s;
}

std::vector<std::vector<long double>> all_node_values(const QuadratureRule& rule,
                                                      const std::vector<Polynomial>& polys,
                                                      bool extended) {
  std::vector<std::vector<long double>> values(polys.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, polys.size() == 0 ? 1 : polys.size());
  if (workers <= 1 || polys.size() < 4) {
    for (std::size_t k = 0; k < polys.size(); ++k) values[k] = node_values(rule, polys[k], extended);
    return values;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t t = 0; t < workers; ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t k = t; k < polys.size(); k += workers) {
        values[k] = node_values(rule, polys[k], extended);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return values;
}

int max_degree(const std::vector<Polynomial>& polys) {
  int d = 0;
  for (const auto& p : polys) d = std::max(d, p.degree());
  return d;
}

}  // namespace

QuadratureRule quadrature_rule(const WeightFunction& w, int order) {
  check_weight(w);
  if (order < 1) throw Error("quadrature_rule: order must be positive");
  const auto& j = *w.jacobi;
  const long double alpha = exact_or(j.alpha_exact, j.alpha);
  const long double beta = exact_or(j.beta_exact, j.beta);
  const long double c = exact_or(j.c_exact, j.c);
  const long double a = (alpha - 1.0L) / 2.0L;
  const long double b = (beta - 1.0L) / 2.0L;

  const GaussJacobiRule gj = gauss_jacobi(order, a, b);
  const long double c2 = c * c;
  const long double half_len = (1.0L - c2) / 2.0L;
  const long double S = std::pow(half_len, a + b + 1.0L);
  const long double scale = w.variable_scale;
  const long double outer = static_cast<long double>(w.constant) / std::fabs(scale);

  std::vector<std::pair<long double, long double>> pts;
  pts.reserve(2 * static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
    const long double t = gj.nodes[i];
    const long double above = half_len * (1.0L + t);  // y - c^2
    const long double below = half_len * (1.0L - t);  // 1 - y
    const long double y = c2 + above;
    const long double s = std::sqrt(y);
    const long double base = 0.5L * S * gj.weights[i] * outer;
    // w(s) + w(-s) contributions after dividing by dy/ds = 2s; the small
    // factors are formed without cancellation.
    const long double w_plus = base * (s + 1.0L) * (above / (s + c)) / s;
    const long double w_minus = base * (below / (1.0L + s)) * (s + c) / s;
    pts.emplace_back(s / scale, w_plus);
    pts.emplace_back(-s / scale, w_minus);
  }
  std::sort(pts.begin(), pts.end());

  QuadratureRule rule;
  rule.target = w;
  rule.order = order;
  for (const auto& [x, wt] : pts) {
    rule.nodes_ext.push_back(x);
    rule.weights_ext.push_back(wt);
    rule.nodes.push_back(static_cast<double>(x));
    rule.weights.push_back(static_cast<double>(wt));
  }
  return rule;
}

std::vector<long double> node_values(const QuadratureRule& rule, const Polynomial& p,
                                     bool extended_precision) {
  std::vector<long double> out(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Rational x = extended_precision ? Rational::from_long_double(rule.nodes_ext[i])
                                          : Rational::from_double(rule.nodes[i]);
    out[i] = p.laurent().evaluate_exact(x).to_long_double();
  }
  return out;
}

double inner_product(const WeightFunction& w, const Polynomial& p, const Polynomial& q,
                     const QuadratureOptions& options) {
  const int order =
      options.order > 0 ? options.order : default_order(std::max(0, p.degree()) + std::max(0, q.degree()));
  const QuadratureRule rule = quadrature_rule(w, order);
  const bool ext = options.extended_precision;
  return weighted_dot(rule, node_values(rule, p, ext), node_values(rule, q, ext), ext);
}

double inner_product(const WeightFunction& w, const Polynomial& p, const Polynomial& q, int order) {
  return inner_product(w, p, q, QuadratureOptions{order, false});
}

double moment(const WeightFunction& w, int n, const QuadratureOptions& options) {
  if (n < 0) throw Error("moment: negative index");
  return inner_product(w, Polynomial(Rational(1)), Polynomial::monomial(n), options);
}

double GramMatrix::max_normalized_offdiagonal() const {
  double worst = 0;
  for (Eigen::Index n = 0; n < entries.rows(); ++n) {
    for (Eigen::Index m = 0; m < entries.cols(); ++m) {
      if (n == m) continue;
      const double scale = std::sqrt(entries(n, n) * entries(m, m));
      worst = std::max(worst, std::abs(entries(n, m)) / scale);
    }
  }
  return worst;
}

double GramMatrix::min_diagonal() const { return entries.diagonal().minCoeff(); }

GramMatrix gram_matrix(const WeightFunction& w, const std::vector<Polynomial>& polys,
                       const QuadratureOptions& options, GramBasis basis) {
  const int order = options.order > 0 ? options.order : default_order(2 * max_degree(polys));
  const QuadratureRule rule = quadrature_rule(w, order);
  const bool ext = options.extended_precision;
  const auto values = all_node_values(rule, polys, ext);
  const auto n = static_cast<Eigen::Index>(polys.size());
  GramMatrix g;
  g.basis = basis;
  g.entries.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = r; s < n; ++s) {
      const double v = weighted_dot(rule, values[static_cast<std::size_t>(r)],
                                    values[static_cast<std::size_t>(s)], ext);
      g.entries(r, s) = v;
      g.entries(s, r) = v;
    }
  }
  return g;
}

GramMatrix gram_matrix(const WeightFunction& w, const std::vector<Polynomial>& polys, int order) {
  return gram_matrix(w, polys, QuadratureOptions{order, false});
}

SymmetryTerms symmetry_terms(const WeightFunction& w, const DunklOperator& op, const Polynomial& V,
                             const Polynomial& W, const QuadratureOptions& options) {
  const Polynomial LV = apply(op, V);
  const Polynomial LW = apply(op, W);
  const int order = options.order > 0
                        ? options.order
                        : default_order(std::max({LV.degree(), V.degree(), 0}) +
                                        std::max({LW.degree(), W.degree(), 0}));
  const QuadratureRule rule = quadrature_rule(w, order);
  const bool ext = options.extended_precision;
  const auto v = node_values(rule, V, ext);
  const auto lv = node_values(rule, LV, ext);
  const auto wv = node_values(rule, W, ext);
  const auto lw = node_values(rule, LW, ext);
  SymmetryTerms t;
  t.lhs = weighted_dot(rule, lv, wv, ext);
  t.rhs = weighted_dot(rule, v, lw, ext);
  long double r = 0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const long double wt = ext ? rule.weights_ext[i] : rule.weights[i];
    r += wt * (lv[i] * wv[i] - v[i] * lw[i]);
  }
  t.residual = static_cast<double>(r);
  return t;
}

double symmetry_residual(const WeightFunction& w, const DunklOperator& op, const Polynomial& V,
                         const Polynomial& W, int order) {
  return symmetry_terms(w, op, V, W, QuadratureOptions{order, false}).residual;
}

std::vector<RecurrenceEntry> recurrence_coefficients(const WeightFunction& w,
                                                     const std::vector<Polynomial>& monic, int N,
                                                     const QuadratureOptions& options) {
  if (N < 0) throw Error("recurrence_coefficients: N must be nonnegative");
  if (static_cast<int>(monic.size()) < N + 1) {
    throw Error("recurrence_coefficients: need P_0..P_N");
  }
  std::vector<Polynomial> polys(monic.begin(), monic.begin() + N + 1);
  const int order = options.order > 0 ? options.order : default_order(2 * max_degree(polys) + 1);
  const QuadratureRule rule = quadrature_rule(w, order);
  const bool ext = options.extended_precision;
  const auto values = all_node_values(rule, polys, ext);

  std::vector<RecurrenceEntry> out;
  double prev_h = 0;
  for (int n = 0; n <= N; ++n) {
    const auto& v = values[static_cast<std::size_t>(n)];
    std::vector<long double> xv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      xv[i] = (ext ? rule.nodes_ext[i] : static_cast<long double>(rule.nodes[i])) * v[i];
    }
    RecurrenceEntry e;
    e.n = n;
    e.h = weighted_dot(rule, v, v, ext);
    if (!(e.h > 0.0) || !std::isfinite(e.h)) {
      throw NumericalBreakdown("recurrence_coefficients: h_" + std::to_string(n) +
                               " is not positive (" + std::to_string(e.h) + ")");
    }
    e.b = weighted_dot(rule, xv, v, ext) / e.h;
    if (n > 0) e.u = e.h / prev_h;
    prev_h = e.h;
    out.push_back(e);
  }
  return out;
}

std::vector<RecurrenceEntry> recurrence_coefficients(const WeightFunction& w, int N, int order) {
  check_weight(w);
  const auto& j = *w.jacobi;
  const BigJacobiParams params{j.alpha_exact.value_or(Rational::from_double(j.alpha)),
                               j.beta_exact.value_or(Rational::from_double(j.beta)),
                               j.c_exact.value_or(Rational::from_double(j.c))};
  const DunklOperator op = DunklOperator::build(big_operator(params));
  std::vector<Polynomial> polys;
  for (auto& e : eigen_sequence(op, N)) polys.push_back(std::move(e.poly));

  // The eigenpolynomials live in t = scale * x; work there and map back.
  WeightFunction unit = w;
  const double scale = w.variable_scale;
  unit.variable_scale = 1.0;
  for (auto& iv : unit.support) {
    const double lo = iv.lo * scale;
    const double hi = iv.hi * scale;
    iv = {std::min(lo, hi), std::max(lo, hi)};
  }
  auto table = recurrence_coefficients(unit, polys, N, QuadratureOptions{order, false});
  for (auto& e : table) {
    e.b /= scale;
    if (e.u) *e.u /= scale * scale;
    e.h /= std::pow(scale, 2 * e.n) * std::abs(scale);
  }
  return table;
}

}  // namespace dunkl
