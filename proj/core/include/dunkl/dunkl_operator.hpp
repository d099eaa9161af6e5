#pragma once

#include <array>
#include <optional>
#include <string>

#include "dunkl/laurent_poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// The nine free constants of the general first-order Dunkl-type operator
///
///   G0 =  mu/x^2 + nu0/x + rho0 + tau0 x
///   G1 = -mu/x^2 + nu1/x + rho1 + tau1 x
///   F  = -mu/x^3 + (nu1 - nu0)/(2x^2) + xi/x + eta
struct OperatorParams {
  Rational mu;
  Rational nu0;
  Rational nu1;
  Rational rho0;
  Rational rho1;
  Rational tau0;
  Rational tau1;
  Rational xi;
  Rational eta;

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

enum class Parity { Even, Odd };

struct Eigenvalue {
  Rational value;
  int n = 0;
  Parity parity = Parity::Even;
};

/// L = F0 + F1 R + G0 d/dx + G1 d/dx R acting on polynomials, where
/// (d/dx R) p = d/dx [p(-x)].
///
/// `build` produces the normalized family (F1 = -F0, so L{1} = 0) from
/// OperatorParams. `from_raw` admits arbitrary coefficient functions; it
/// exists for probing what happens outside the family.
class DunklOperator {
 public:
  static DunklOperator build(const OperatorParams& params);
  /// L = F (I - R) + G0 d/dx + G1 d/dx R with arbitrary Laurent coefficients.
  static DunklOperator from_raw(LaurentPoly F, LaurentPoly G0, LaurentPoly G1);
  /// Fully general four-function form.
  static DunklOperator from_raw(LaurentPoly F0, LaurentPoly F1, LaurentPoly G0, LaurentPoly G1);

  const LaurentPoly& F() const noexcept { return f0_; }
  const LaurentPoly& F0() const noexcept { return f0_; }
  const LaurentPoly& F1() const noexcept { return f1_; }
  const LaurentPoly& G0() const noexcept { return g0_; }
  const LaurentPoly& G1() const noexcept { return g1_; }
  /// Present only for operators produced by build().
  const std::optional<OperatorParams>& params() const noexcept { return params_; }

  /// Image of an arbitrary Laurent polynomial, no postcondition checks.
  LaurentPoly apply_laurent(const LaurentPoly& p) const;

 private:
  DunklOperator() = default;

  LaurentPoly f0_;
  LaurentPoly f1_;
  LaurentPoly g0_;
  LaurentPoly g1_;
  std::optional<OperatorParams> params_;
};

inline DunklOperator build(const OperatorParams& params) { return DunklOperator::build(params); }

/// tau1 != +-tau0 and 2 eta + (2k+1)(tau0 - tau1) != 0 for k = 0..N.
bool check_nondegenerate(const OperatorParams& params, int N);

/// lambda_0, ..., lambda_N pairwise distinct. This also rules out collisions
/// between an even-degree and an odd-degree eigenvalue, which
/// check_nondegenerate does not look at.
bool spectrum_is_simple(const OperatorParams& params, int N);

/// (tau0 + tau1) n for even n, 2 eta + (tau0 - tau1) n for odd n.
Rational eigenvalue(const OperatorParams& params, int n);
Eigenvalue eigenvalue_record(const OperatorParams& params, int n);

/// L p for a genuine polynomial p. Throws NegativePowerResidue when the image
/// keeps a negative power of x.
Polynomial apply(const DunklOperator& op, const Polynomial& p);

struct DegreeCondition {
  LaurentPoly Q;        // the computed image
  int max_degree = 0;   // degree bound it must respect
  bool passed = false;  // Q is a polynomial with deg Q <= max_degree
};

struct DegreeConditionReport {
  // Q1 = 2xF + G0 - G1, Q2 = 2x(G0 + G1), Q3 = 2x^3 F + 3x^2 (G0 - G1).
  std::array<DegreeCondition, 3> conditions;
  /// F1 = -F0, i.e. L{1} = 0.
  bool normalized = false;
  bool passed() const {
    return normalized && conditions[0].passed && conditions[1].passed && conditions[2].passed;
  }
};

DegreeConditionReport verify_degree_conditions(const DunklOperator& op);

/// Subleading coefficients of L x^n = lambda x^n + k1 x^{n-1} + k2 x^{n-2} + k3 x^{n-3}.
struct KappaCoefficients {
  Rational leading;  // lambda_n as read off the image
  Rational kappa1;
  Rational kappa2;
  Rational kappa3;
  /// False if the image of x^n has terms below x^{n-3} or above x^n.
  bool within_three_terms = true;
};

KappaCoefficients kappa_coefficients(const DunklOperator& op, int n);

/// Parameters of kappa0 * L rewritten in the variable t = kappa1 * x.
/// F~(t) = kappa0 F(t / kappa1), G~(t) = kappa0 kappa1 G(t / kappa1).
OperatorParams scale_params(const OperatorParams& params, const Rational& kappa0,
                            const Rational& kappa1);

std::string to_string(const OperatorParams& params);

}  // namespace dunkl
