#include "dunkl/jacobi_m1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

OperatorParams big_operator(const BigJacobiParams& p) {
  OperatorParams op;
  op.tau1 = Rational(2);
  op.rho1 = Rational(2) * (p.c - Rational(1));
  op.nu1 = Rational(-2) * p.c;
  op.xi = p.beta - p.alpha * p.c;
  op.eta = -(p.alpha + p.beta + Rational(1));
  return op;
}

OperatorParams little_operator(const Rational& alpha, const Rational& beta) {
  return big_operator({alpha, beta, Rational(0)});
}

OperatorParams case_i_operator(const Rational& alpha, const Rational& beta) {
  OperatorParams op;
  op.rho1 = Rational(2);
  op.tau1 = Rational(-2);
  op.xi = -beta;
  op.eta = alpha + beta + Rational(1);
  return op;
}

OperatorParams case_ii_operator(const Rational& alpha, const Rational& beta) {
  OperatorParams op;
  op.tau1 = Rational(2);
  op.xi = -beta;
  op.eta = alpha + beta + Rational(1);
  return op;
}

OperatorParams case_iii_operator(const Rational& a, const Rational& b) {
  // 2(x-1)^2/x = 2x - 4 + 2/x; F's 1/x^2 coefficient nu1/2 = 1 is automatic.
  OperatorParams op;
  op.tau1 = Rational(2);
  op.rho1 = Rational(-4);
  op.nu1 = Rational(2);
  op.xi = a;
  op.eta = b;
  return op;
}

OperatorParams case_iv_operator(const Rational& alpha, const Rational& beta) {
  OperatorParams op;
  op.rho1 = Rational(2);
  op.nu1 = Rational(-2);
  op.xi = -alpha;
  op.eta = -beta - Rational(1);
  return op;
}

OperatorParams case_v_operator(const Rational& alpha, const Rational& beta) {
  OperatorParams op;
  op.nu1 = Rational(-2);
  op.xi = -alpha;
  op.eta = -beta;
  return op;
}

namespace {

// theta(t)(t+1)(t-c)|1-t^2|^{(alpha-1)/2}|t^2-c^2|^{(beta-1)/2}; the little
// weight is the c = 0 member with the theta and t factors merged into |t|.
WeightFunction jacobi_weight_unchecked(double alpha, double beta, double c) {
  WeightFunction w;
  w.jacobi = JacobiForm{alpha, beta, c, std::nullopt, std::nullopt, std::nullopt};
  if (c == 0.0) {
    w.affine_factors = {{-1.0, 1}};
    w.abs_power = beta;
    w.algebraic_factors = {{1.0, -1.0, (alpha - 1.0) / 2.0}};
    w.support = {{-1.0, 1.0}};
  } else {
    w.sign_factor = true;
    w.affine_factors = {{-1.0, 1}, {c, 1}};
    w.algebraic_factors = {{1.0, -1.0, (alpha - 1.0) / 2.0}, {-c * c, 1.0, (beta - 1.0) / 2.0}};
    w.support = {{-1.0, -c}, {c, 1.0}};
  }
  return w;
}

void require_integrable(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    std::ostringstream os;
    os << "weight requires alpha > -1 and beta > -1 (got alpha=" << alpha << ", beta=" << beta
       << ")";
    throw ParameterRange(os.str());
  }
}

/// Maps a support given in t = scale * x back to x.
std::vector<Interval> rescale_support(const std::vector<Interval>& t_support, double scale) {
  std::vector<Interval> out;
  for (const auto& iv : t_support) {
    const double a = iv.lo / scale;
    const double b = iv.hi / scale;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

bool g0_vanishes(const OperatorParams& p) {
  return p.mu.is_zero() && p.nu0.is_zero() && p.rho0.is_zero() && p.tau0.is_zero();
}

struct Reduction {
  CaseTag tag = CaseTag::NotSymmetrizable;
  // Scalings taking the operator to its reduced form. Exact when rational.
  std::optional<Rational> kappa0;
  std::optional<Rational> kappa1;
  double kappa1_value = 1.0;
  double kappa0_value = 1.0;
  std::string notes;
};

/// Zeros of x G1 = tau1 x^2 + rho1 x + nu1 for the generic regime. The root
/// of larger modulus is sent to t = 1.
struct GenericZeros {
  double d = 0;
  double other = 0;
  std::optional<Rational> d_exact;
};

GenericZeros generic_zeros(const OperatorParams& p) {
  const Rational disc = p.rho1 * p.rho1 - Rational(4) * p.tau1 * p.nu1;
  GenericZeros z;
  if (const auto s = exact_sqrt(disc)) {
    const Rational r1 = (-p.rho1 + *s) / (Rational(2) * p.tau1);
    const Rational r2 = (-p.rho1 - *s) / (Rational(2) * p.tau1);
    const Rational a1 = abs(r1);
    const Rational a2 = abs(r2);
    const bool first = a1 > a2 || (a1 == a2 && r1.sign() > 0);
    z.d_exact = first ? r1 : r2;
    z.d = z.d_exact->to_double();
    z.other = (first ? r2 : r1).to_double();
    return z;
  }
  const double tau1 = p.tau1.to_double();
  const double rho1 = p.rho1.to_double();
  const double nu1 = p.nu1.to_double();
  const double sq = std::sqrt(disc.to_double());
  // Cancellation-free pair of roots.
  const double q = -0.5 * (rho1 + (rho1 >= 0 ? sq : -sq));
  const double r1 = q / tau1;
  const double r2 = nu1 / q;
  const bool first = std::abs(r1) >= std::abs(r2);
  z.d = first ? r1 : r2;
  z.other = first ? r2 : r1;
  return z;
}

Reduction reduce(const OperatorParams& p) {
  Reduction r;
  if (!g0_vanishes(p)) {
    r.tag = CaseTag::NotSymmetrizable;
    r.notes = "G0 != 0: a real symmetry factor requires mu = nu0 = rho0 = tau0 = 0";
    return r;
  }
  const bool nu = !p.nu1.is_zero();
  const bool rho = !p.rho1.is_zero();
  const bool tau = !p.tau1.is_zero();

  if (nu && tau) {
    const Rational disc = p.rho1 * p.rho1 - Rational(4) * p.tau1 * p.nu1;
    if (disc.sign() < 0) {
      r.tag = CaseTag::NotSymmetrizable;
      r.notes = "x G1 has complex zeros; w(x) and w(-x) have opposite signs for every x";
      return r;
    }
    r.kappa0 = Rational(2) / p.tau1;
    if (disc.is_zero()) {
      r.tag = CaseTag::Case_iii;
      const Rational d = -p.rho1 / (Rational(2) * p.tau1);
      r.kappa1 = Rational(1) / d;
      r.notes = "x G1 has coinciding zeros";
      return r;
    }
    r.tag = CaseTag::GenericBig;
    const GenericZeros z = generic_zeros(p);
    if (z.d_exact) {
      r.kappa1 = Rational(1) / *z.d_exact;
    } else {
      r.kappa1_value = 1.0 / z.d;
      r.kappa0_value = 2.0 / p.tau1.to_double();
      r.notes = "irrational zeros of x G1; reduced parameters are floating-point";
    }
    return r;
  }
  if (!nu) {
    if (tau && rho) {
      r.tag = CaseTag::LittleCase_i;
      r.kappa0 = Rational(-2) / p.tau1;
      r.kappa1 = -p.tau1 / p.rho1;
      return r;
    }
    if (tau) {
      r.tag = CaseTag::Case_ii;
      r.kappa0 = Rational(2) / p.tau1;
      r.kappa1 = Rational(1);
      return r;
    }
    r.tag = CaseTag::DegenerateSpectrum;
    r.notes = rho ? "G1 is constant: every even-degree eigenvalue vanishes"
                  : "G1 = 0: every even-degree eigenvalue vanishes";
    return r;
  }
  // nu1 != 0, tau1 = 0.
  if (rho) {
    r.tag = CaseTag::Case_iv;
    r.kappa1 = -p.rho1 / p.nu1;
    r.kappa0 = Rational(2) / (*r.kappa1 * p.rho1);
    return r;
  }
  r.tag = CaseTag::Case_v;
  r.kappa1 = Rational(1);
  r.kappa0 = Rational(-2) / p.nu1;
  return r;
}

/// xi, eta of the reduced operator as doubles (works for irrational scalings).
std::pair<double, double> reduced_xi_eta(const OperatorParams& p, const Reduction& r,
                                         std::optional<OperatorParams>& exact) {
  if (r.kappa0 && r.kappa1) {
    exact = scale_params(p, *r.kappa0, *r.kappa1);
    return {exact->xi.to_double(), exact->eta.to_double()};
  }
  return {r.kappa0_value * r.kappa1_value * p.xi.to_double(), r.kappa0_value * p.eta.to_double()};
}

WeightFunction finish_weight(WeightFunction w, double kappa1) {
  w.variable_scale = kappa1;
  w.support = rescale_support(w.support, kappa1);
  return w;
}

WeightFunction odd_weight_on_unit_window() {
  WeightFunction w;
  w.sign_factor = true;
  w.support = {{-1.0, 1.0}};
  return w;
}

ClassificationVerdict analyze(const OperatorParams& p) {
  const Reduction r = reduce(p);
  ClassificationVerdict v;
  v.case_tag = r.tag;
  v.notes = r.notes;
  if (r.tag == CaseTag::NotSymmetrizable || r.tag == CaseTag::DegenerateSpectrum) return v;

  std::optional<OperatorParams> exact;
  const auto [xi, eta] = reduced_xi_eta(p, r, exact);
  v.canonical = exact;
  if (r.kappa0) v.kappa0 = *r.kappa0;
  if (r.kappa1) {
    v.kappa1 = *r.kappa1;
    v.kappa1_value = r.kappa1->to_double();
  } else {
    v.kappa1_value = r.kappa1_value;
  }
  const double k1 = v.kappa1_value;

  switch (r.tag) {
    case CaseTag::GenericBig: {
      const GenericZeros z = generic_zeros(p);
      const double c = exact ? (-exact->nu1 / Rational(2)).to_double() : -z.other / z.d;
      const double alpha = (-eta - 1.0 - xi) / (1.0 + c);
      const double beta = xi + alpha * c;
      v.case_parameters = {{"alpha", alpha}, {"beta", beta}, {"c", c}};
      if (!(c > 0.0 && c < 1.0)) {
        std::ostringstream os;
        os << "reduced c = " << c << " lies outside (0,1); regime not implemented";
        v.notes = v.notes.empty() ? os.str() : v.notes + "; " + os.str();
        return v;
      }
      WeightFunction w = jacobi_weight_unchecked(alpha, beta, c);
      if (exact) {
        const Rational ce = -exact->nu1 / Rational(2);
        const Rational ae = (-exact->eta - Rational(1) - exact->xi) / (Rational(1) + ce);
        w.jacobi->alpha_exact = ae;
        w.jacobi->beta_exact = exact->xi + ae * ce;
        w.jacobi->c_exact = ce;
        v.positive_on_symmetric_support = ae > Rational(-1) && *w.jacobi->beta_exact > Rational(-1);
      } else {
        v.positive_on_symmetric_support = alpha > -1.0 && beta > -1.0;
      }
      if (!v.positive_on_symmetric_support) v.notes = "alpha <= -1 or beta <= -1: weight not integrable";
      v.weight = finish_weight(std::move(w), k1);
      return v;
    }
    case CaseTag::LittleCase_i: {
      const double beta = -xi;
      const double alpha = eta - beta - 1.0;
      v.case_parameters = {{"alpha", alpha}, {"beta", beta}};
      WeightFunction w = jacobi_weight_unchecked(alpha, beta, 0.0);
      const Rational be = -exact->xi;
      const Rational ae = exact->eta - be - Rational(1);
      w.jacobi->alpha_exact = ae;
      w.jacobi->beta_exact = be;
      w.jacobi->c_exact = Rational(0);
      v.positive_on_symmetric_support = ae > Rational(-1) && be > Rational(-1);
      if (!v.positive_on_symmetric_support) v.notes = "alpha <= -1 or beta <= -1: weight not integrable";
      v.weight = finish_weight(std::move(w), k1);
      return v;
    }
    case CaseTag::Case_ii: {
      const double beta = -xi;
      const double alpha = eta - beta - 1.0;
      v.case_parameters = {{"alpha", alpha}, {"beta", beta}};
      WeightFunction w = odd_weight_on_unit_window();
      w.abs_power = -(alpha + beta + 2.0);
      v.weight = finish_weight(std::move(w), k1);
      v.notes = "theta(x) makes w odd: no symmetric interval carries a positive weight";
      break;
    }
    case CaseTag::Case_iii: {
      const double a = xi;
      const double b = eta;
      v.case_parameters = {{"a", a}, {"b", b}};
      WeightFunction w = odd_weight_on_unit_window();
      w.affine_factors = {{-1.0, 2}};
      w.algebraic_factors = {{-1.0, 1.0, -(b + 3.0) / 2.0}};
      w.exponential_factor = ExponentialFactor{a + b + 1.0, 1.0, -1};
      v.weight = finish_weight(std::move(w), k1);
      v.notes = "x G1 has coinciding zeros; theta(x) rules out positivity on symmetric intervals";
      break;
    }
    case CaseTag::Case_iv: {
      const double alpha = -xi;
      const double beta = -eta - 1.0;
      v.case_parameters = {{"alpha", alpha}, {"beta", beta}};
      WeightFunction w = odd_weight_on_unit_window();
      w.affine_factors = {{-1.0, 1}};
      w.algebraic_factors = {{1.0, -1.0, (alpha + beta) / 2.0}};
      v.weight = finish_weight(std::move(w), k1);
      v.notes = "w(x) > 0 cannot hold on a symmetric interval";
      break;
    }
    case CaseTag::Case_v: {
      const double alpha = -xi;
      const double beta = -eta;
      v.case_parameters = {{"alpha", alpha}, {"beta", beta}};
      WeightFunction w = odd_weight_on_unit_window();
      w.exponential_factor = ExponentialFactor{-beta / 2.0, 0.0, 1};
      v.weight = finish_weight(std::move(w), k1);
      v.notes = "Gaussian factor times theta(x): never positive on a symmetric interval";
      break;
    }
    default:
      break;
  }
  return v;
}

void check_sampled_verdict(const ClassificationVerdict& v) {
  if (!v.weight) return;
  const SignSample s = sample_signs(*v.weight);
  const bool degenerate_case = v.case_tag == CaseTag::Case_ii || v.case_tag == CaseTag::Case_iii ||
                               v.case_tag == CaseTag::Case_iv || v.case_tag == CaseTag::Case_v;
  if (degenerate_case && !s.sign_change()) {
    throw InternalConsistencyError(std::string(to_string(v.case_tag)) +
                                   ": sampling found no sign change in a weight known to be "
                                   "non-positive on symmetric supports");
  }
  if (v.positive_on_symmetric_support && s.negative > 0) {
    throw InternalConsistencyError(std::string(to_string(v.case_tag)) +
                                   ": weight certified positive but sampled negative");
  }
}

}  // namespace

WeightFunction big_weight(const BigJacobiParams& p) {
  if (!(p.c > Rational(0) && p.c < Rational(1))) {
    throw ParameterRange("big -1-Jacobi weight requires 0 < c < 1 (got c=" + p.c.str() + ")");
  }
  if (!(p.alpha > Rational(-1)) || !(p.beta > Rational(-1))) {
    throw ParameterRange("weight requires alpha > -1 and beta > -1 (got alpha=" + p.alpha.str() +
                         ", beta=" + p.beta.str() + ")");
  }
  WeightFunction w = jacobi_weight_unchecked(p.alpha.to_double(), p.beta.to_double(), p.c.to_double());
  w.jacobi->alpha_exact = p.alpha;
  w.jacobi->beta_exact = p.beta;
  w.jacobi->c_exact = p.c;
  return w;
}

WeightFunction big_weight(double alpha, double beta, double c) {
  if (!(c > 0.0 && c < 1.0)) throw ParameterRange("big -1-Jacobi weight requires 0 < c < 1");
  require_integrable(alpha, beta);
  return jacobi_weight_unchecked(alpha, beta, c);
}

WeightFunction little_weight(const Rational& alpha, const Rational& beta) {
  if (!(alpha > Rational(-1)) || !(beta > Rational(-1))) {
    throw ParameterRange("weight requires alpha > -1 and beta > -1 (got alpha=" + alpha.str() +
                         ", beta=" + beta.str() + ")");
  }
  WeightFunction w = jacobi_weight_unchecked(alpha.to_double(), beta.to_double(), 0.0);
  w.jacobi->alpha_exact = alpha;
  w.jacobi->beta_exact = beta;
  w.jacobi->c_exact = Rational(0);
  return w;
}

WeightFunction little_weight(double alpha, double beta) {
  require_integrable(alpha, beta);
  return jacobi_weight_unchecked(alpha, beta, 0.0);
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::GenericBig: return "GenericBig";
    case CaseTag::LittleCase_i: return "LittleCase_i";
    case CaseTag::Case_ii: return "Case_ii";
    case CaseTag::Case_iii: return "Case_iii";
    case CaseTag::Case_iv: return "Case_iv";
    case CaseTag::Case_v: return "Case_v";
    case CaseTag::NotSymmetrizable: return "NotSymmetrizable";
    case CaseTag::DegenerateSpectrum: return "DegenerateSpectrum";
  }
  return "?";
}

ClassificationVerdict classify(const OperatorParams& params) {
  ClassificationVerdict v = analyze(params);
  check_sampled_verdict(v);
  return v;
}

Canonicalization canonicalize(const OperatorParams& params) {
  if (params.tau1.is_zero()) throw NotCanonicalizable("tau1 = 0: G1 has no quadratic numerator");
  const Reduction r = reduce(params);
  if (r.tag == CaseTag::Case_iii) {
    throw NotCanonicalizable("x G1 has coinciding zeros (d = -c)");
  }
  if (r.tag != CaseTag::GenericBig) {
    throw NotCanonicalizable(std::string("operator is ") + std::string(to_string(r.tag)) +
                             ", not GenericBig");
  }
  if (!r.kappa0 || !r.kappa1) {
    throw NotCanonicalizable("zeros of x G1 are irrational; no exact rational scaling exists");
  }
  return Canonicalization{scale_params(params, *r.kappa0, *r.kappa1), *r.kappa0, *r.kappa1};
}

PearsonResidual pearson_residual(const WeightFunction& w, const DunklOperator& op, double x) {
  if (!op.G0().is_zero()) throw NotSymmetrizable("pearson_residual: operator has G0 != 0");
  if (x == 0.0 || !w.in_support_interior(x) || !w.in_support_interior(-x) || !w.evaluable_at(x) ||
      !w.evaluable_at(-x)) {
    throw UnsupportedPoint("pearson_residual: x = " + std::to_string(x) +
                           " is not an interior point of a symmetric support");
  }
  const auto to_d = [](const Rational& r) { return r.to_double(); };
  const LaurentPolyD G1 = op.G1().map_coefficients<double>(to_d);
  const LaurentPolyD dG1 = G1.derivative();
  const LaurentPolyD F = op.F().map_coefficients<double>(to_d);

  const double wp = w.value(x);
  const double wm = w.value(-x);
  const double g1p = G1.evaluate(x);
  const double g1m = G1.evaluate(-x);
  const double fp = F.evaluate(x);
  const double fm = F.evaluate(-x);
  const double dw = wp * w.log_derivative(x);
  const double dg1 = dG1.evaluate(x);

  PearsonResidual r;
  r.even_defect = wp * g1p - wm * g1m;
  r.even_scale = std::abs(wp * g1p) + std::abs(wm * g1m);
  const double flux_terms[] = {wm * fm, -wp * fp, -dw * g1p, -wp * dg1};
  for (double t : flux_terms) {
    r.flux_defect += t;
    r.flux_scale += std::abs(t);
  }
  return r;
}

WeightFunction solve_pearson(const DunklOperator& op) {
  if (!op.params()) throw NotSymmetrizable("solve_pearson needs an operator built from parameters");
  ClassificationVerdict v = classify(*op.params());
  if (!v.weight) {
    throw NotSymmetrizable(std::string(to_string(v.case_tag)) +
                           (v.notes.empty() ? "" : ": " + v.notes));
  }
  return std::move(*v.weight);
}

SignSample sample_signs(const WeightFunction& w, int per_interval) {
  SignSample s;
  for (const auto& iv : w.support) {
    for (int i = 0; i < per_interval; ++i) {
      // Offset grid avoids endpoints and the origin.
      const double u = (i + 0.5 + 0.1234567) / (per_interval + 0.5);
      const double x = iv.lo + (iv.hi - iv.lo) * std::min(u, 0.999999);
      for (double pt : {x, -x}) {
        if (pt == 0.0 || !w.evaluable_at(pt)) continue;
        const double val = w.value(pt);
        if (!std::isfinite(val) || val == 0.0) continue;
        (val > 0 ? s.positive : s.negative)++;
      }
    }
  }
  return s;
}

}  // namespace dunkl
