#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dunkl/dunkl_operator.hpp"
#include "dunkl/weight_function.hpp"

namespace dunkl {

/// Big -1-Jacobi parameters; c = 0 selects the little family.
struct BigJacobiParams {
  Rational alpha;
  Rational beta;
  Rational c;
};

/// mu = nu0 = rho0 = tau0 = 0, tau1 = 2, rho1 = 2(c-1), nu1 = -2c,
/// xi = beta - alpha c, eta = -(alpha + beta + 1).
OperatorParams big_operator(const BigJacobiParams& p);
/// big_operator at c = 0: G1 = 2(x - 1), F = beta/x - alpha - beta - 1.
OperatorParams little_operator(const Rational& alpha, const Rational& beta);

// Reduced forms of the degenerate regimes.
/// G1 = 2(1 - x), F = alpha + beta + 1 - beta/x (= -little_operator).
OperatorParams case_i_operator(const Rational& alpha, const Rational& beta);
/// G1 = 2x, F = alpha + beta + 1 - beta/x.
OperatorParams case_ii_operator(const Rational& alpha, const Rational& beta);
/// G1 = 2(x - 1)^2 / x, F = 1/x^2 + a/x + b.
OperatorParams case_iii_operator(const Rational& a, const Rational& b);
/// G1 = 2(1 - 1/x), F = -1/x^2 - alpha/x - beta - 1.
OperatorParams case_iv_operator(const Rational& alpha, const Rational& beta);
/// G1 = -2/x, F = -1/x^2 - alpha/x - beta.
OperatorParams case_v_operator(const Rational& alpha, const Rational& beta);

/// theta(x)(x+1)(x-c)(1-x^2)^{(alpha-1)/2}(x^2-c^2)^{(beta-1)/2} on
/// [-1,-c] U [c,1]. Requires alpha, beta > -1 and 0 < c < 1.
WeightFunction big_weight(const BigJacobiParams& p);
WeightFunction big_weight(double alpha, double beta, double c);
/// (x+1)(1-x^2)^{(alpha-1)/2}|x|^beta on [-1,1]. Requires alpha, beta > -1.
WeightFunction little_weight(const Rational& alpha, const Rational& beta);
WeightFunction little_weight(double alpha, double beta);

enum class CaseTag {
  GenericBig,
  LittleCase_i,
  Case_ii,
  Case_iii,
  Case_iv,
  Case_v,
  NotSymmetrizable,
  DegenerateSpectrum,
};

std::string_view to_string(CaseTag tag);

struct ClassificationVerdict {
  CaseTag case_tag = CaseTag::NotSymmetrizable;
  /// Present iff the Pearson equation was solved in one of the catalogued
  /// closed forms.
  std::optional<WeightFunction> weight;
  /// The weight is a positive integrable density on a symmetric support.
  bool positive_on_symmetric_support = false;
  std::string notes;
  /// Reduced-form parameters of kappa0 * L in t = kappa1 * x, when the
  /// scalings are rational.
  std::optional<OperatorParams> canonical;
  Rational kappa0{1};
  Rational kappa1{1};
  double kappa1_value = 1.0;
  /// Named parameters of the reduced form: alpha, beta, c or a, b.
  std::vector<std::pair<std::string, double>> case_parameters;
};

ClassificationVerdict classify(const OperatorParams& params);

struct Canonicalization {
  OperatorParams params;
  Rational kappa0;
  Rational kappa1;
};

/// Rescales a GenericBig operator to G1 = 2(x-1)(x+c)/x. Throws
/// NotCanonicalizable for coinciding, complex, or irrational zeros of x G1,
/// for tau1 = 0, and for any other regime.
Canonicalization canonicalize(const OperatorParams& params);

struct PearsonResidual {
  /// w(x) G1(x) - w(-x) G1(-x)
  double even_defect = 0;
  /// w(-x) F(-x) - w(x) F(x) - d/dx [w(x) G1(x)]
  double flux_defect = 0;
  double even_scale = 0;
  double flux_scale = 0;

  double relative_even() const { return even_scale > 0 ? std::abs(even_defect) / even_scale : 0.0; }
  double relative_flux() const { return flux_scale > 0 ? std::abs(flux_defect) / flux_scale : 0.0; }
};

/// Both symmetry conditions at x, with the derivative of w G1 taken from the
/// closed-form logarithmic derivative of w. Requires G0 = 0, x != 0, and
/// both x and -x inside the support.
PearsonResidual pearson_residual(const WeightFunction& w, const DunklOperator& op, double x);

/// Weight solving the Pearson equations of a symmetrizable operator, in the
/// closed form of its regime. Throws NotSymmetrizable otherwise.
WeightFunction solve_pearson(const DunklOperator& op);

struct SignSample {
  int positive = 0;
  int negative = 0;
  bool sign_change() const { return positive > 0 && negative > 0; }
};

/// Evaluates w at `per_interval` interior points of each support interval
/// and at their mirror images.
SignSample sample_signs(const WeightFunction& w, int per_interval = 64);

}  // namespace dunkl
