#include "dunkl/dunkl_operator.hpp"

#include <sstream>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

DunklOperator DunklOperator::build(const OperatorParams& p) {
  DunklOperator op;
  op.g0_ = LaurentPoly{{-2, p.mu}, {-1, p.nu0}, {0, p.rho0}, {1, p.tau0}};
  op.g1_ = LaurentPoly{{-2, -p.mu}, {-1, p.nu1}, {0, p.rho1}, {1, p.tau1}};
  op.f0_ = LaurentPoly{{-3, -p.mu}, {-2, (p.nu1 - p.nu0) / Rational(2)}, {-1, p.xi}, {0, p.eta}};
  op.f1_ = -op.f0_;
  op.params_ = p;
  return op;
}

DunklOperator DunklOperator::from_raw(LaurentPoly F, LaurentPoly G0, LaurentPoly G1) {
  DunklOperator op;
  op.f1_ = -F;
  op.f0_ = std::move(F);
  op.g0_ = std::move(G0);
  op.g1_ = std::move(G1);
  return op;
}

DunklOperator DunklOperator::from_raw(LaurentPoly F0, LaurentPoly F1, LaurentPoly G0,
                                      LaurentPoly G1) {
  DunklOperator op;
  op.f0_ = std::move(F0);
  op.f1_ = std::move(F1);
  op.g0_ = std::move(G0);
  op.g1_ = std::move(G1);
  return op;
}

LaurentPoly DunklOperator::apply_laurent(const LaurentPoly& p) const {
  const LaurentPoly rp = p.reflected();
  LaurentPoly out = f0_ * p;
  out += f1_ * rp;
  out += g0_ * p.derivative();
  out += g1_ * rp.derivative();
  return out;
}

bool check_nondegenerate(const OperatorParams& p, int N) {
  if (N < 0) throw Error("check_nondegenerate: N must be nonnegative");
  if (p.tau1 == p.tau0 || p.tau1 == -p.tau0) return false;
  const Rational diff = p.tau0 - p.tau1;
  for (int k = 0; k <= N; ++k) {
    if ((Rational(2) * p.eta + Rational(2 * k + 1) * diff).is_zero()) return false;
  }
  return true;
}

bool spectrum_is_simple(const OperatorParams& params, int N) {
  std::vector<Rational> seen;
  seen.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    Rational lambda = eigenvalue(params, n);
    for (const auto& m : seen) {
      if (m == lambda) return false;
    }
    seen.push_back(std::move(lambda));
  }
  return true;
}

Rational eigenvalue(const OperatorParams& p, int n) {
  if (n < 0) throw Error("eigenvalue: negative degree");
  if (n % 2 == 0) return (p.tau0 + p.tau1) * Rational(n);
  return Rational(2) * p.eta + (p.tau0 - p.tau1) * Rational(n);
}

Eigenvalue eigenvalue_record(const OperatorParams& params, int n) {
  return Eigenvalue{eigenvalue(params, n), n, n % 2 == 0 ? Parity::Even : Parity::Odd};
}

Polynomial apply(const DunklOperator& op, const Polynomial& p) {
  LaurentPoly image = op.apply_laurent(p.laurent());
  if (!image.is_polynomial()) throw NegativePowerResidue(*image.valuation());
  return Polynomial(std::move(image));
}

DegreeConditionReport verify_degree_conditions(const DunklOperator& op) {
  const LaurentPoly x = LaurentPoly::monomial(1);
  const LaurentPoly x2 = LaurentPoly::monomial(2);
  const LaurentPoly x3 = LaurentPoly::monomial(3);
  const auto& F = op.F();
  const auto& G0 = op.G0();
  const auto& G1 = op.G1();

  DegreeConditionReport report;
  report.conditions[0].Q = Rational(2) * (x * F) + G0 - G1;
  report.conditions[0].max_degree = 1;
  report.conditions[1].Q = Rational(2) * (x * (G0 + G1));
  report.conditions[1].max_degree = 2;
  report.conditions[2].Q = Rational(2) * (x3 * F) + Rational(3) * (x2 * (G0 - G1));
  report.conditions[2].max_degree = 3;
  for (auto& c : report.conditions) {
    c.passed = c.Q.is_polynomial() && c.Q.degree().value_or(0) <= c.max_degree;
  }
  report.normalized = (op.F0() + op.F1()).is_zero();
  return report;
}

KappaCoefficients kappa_coefficients(const DunklOperator& op, int n) {
  if (n < 1) throw Error("kappa_coefficients: n must be at least 1");
  const LaurentPoly image = op.apply_laurent(LaurentPoly::monomial(n));
  KappaCoefficients k;
  k.leading = image.coefficient(n);
  k.kappa1 = image.coefficient(n - 1);
  k.kappa2 = image.coefficient(n - 2);
  k.kappa3 = image.coefficient(n - 3);
  for (const auto& [e, c] : image.terms()) {
    if (e > n || e < n - 3) k.within_three_terms = false;
  }
  return k;
}

OperatorParams scale_params(const OperatorParams& p, const Rational& k0, const Rational& k1) {
  if (k0.is_zero() || k1.is_zero()) throw Error("scale_params: scales must be nonzero");
  const Rational k1sq = k1 * k1;
  OperatorParams s;
  // Coefficient of x^j in G picks up kappa0 * kappa1^{1-j}; in F, kappa0 * kappa1^{-j}.
  s.mu = k0 * k1sq * k1 * p.mu;
  s.nu0 = k0 * k1sq * p.nu0;
  s.nu1 = k0 * k1sq * p.nu1;
  s.rho0 = k0 * k1 * p.rho0;
  s.rho1 = k0 * k1 * p.rho1;
  s.tau0 = k0 * p.tau0;
  s.tau1 = k0 * p.tau1;
  s.xi = k0 * k1 * p.xi;
  s.eta = k0 * p.eta;
  return s;
}

std::string to_string(const OperatorParams& p) {
  std::ostringstream os;
  os << "mu=" << p.mu << " nu0=" << p.nu0 << " nu1=" << p.nu1 << " rho0=" << p.rho0
     << " rho1=" << p.rho1 << " tau0=" << p.tau0 << " tau1=" << p.tau1 << " xi=" << p.xi
     << " eta=" << p.eta;
  return os.str();
}

}  // namespace dunkl
