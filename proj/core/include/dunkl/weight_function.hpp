#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// (t - root)^multiplicity
struct AffineFactor {
  double root = 0;
  int multiplicity = 1;
};

/// |constant + quadratic * t^2|^exponent
struct EvenPowerFactor {
  double constant = 0;
  double quadratic = 0;
  double exponent = 0;
};

/// exp(coefficient * (t^2 - shift)^power) with power = +1 or -1.
struct ExponentialFactor {
  double coefficient = 0;
  double shift = 0;
  int power = 1;
};

struct Interval {
  double lo = 0;
  double hi = 0;
  bool contains_interior(double x) const { return lo < x && x < hi; }
};

/// Parameters of the big (c > 0) or little (c = 0) -1-Jacobi weight
/// theta(t) (t+1)(t-c) (1-t^2)^{(alpha-1)/2} (t^2-c^2)^{(beta-1)/2}.
struct JacobiForm {
  double alpha = 0;
  double beta = 0;
  double c = 0;
  /// Exact values when the weight was built from rational parameters.
  std::optional<Rational> alpha_exact;
  std::optional<Rational> beta_exact;
  std::optional<Rational> c_exact;
};

/// Closed-form weight
///
///   w(x) = C * theta(t)^s * prod (t - r_i)^{m_i} * |t|^p
///            * prod |A_j + B_j t^2|^{e_j} * exp(k (t^2 - s)^{+-1}),  t = scale * x,
///
/// where theta is the sign function. `support` is expressed in x.
struct WeightFunction {
  double constant = 1.0;
  bool sign_factor = false;
  std::vector<AffineFactor> affine_factors;
  double abs_power = 0.0;
  std::vector<EvenPowerFactor> algebraic_factors;
  std::optional<ExponentialFactor> exponential_factor;
  double variable_scale = 1.0;
  std::vector<Interval> support;
  std::optional<JacobiForm> jacobi;

  /// False where a factor is singular or undefined (e.g. theta at 0).
  bool evaluable_at(double x) const;
  double operator()(double x) const { return value(x); }
  double value(double x) const;
  /// d/dx log|w(x)|, from the closed form.
  double log_derivative(double x) const;
  /// w'(x) = w(x) * log_derivative(x); requires w(x) != 0.
  double derivative(double x) const;

  bool in_support_interior(double x) const;
  /// Support invariant under x -> -x.
  bool support_is_symmetric(double tol = 0.0) const;

  /// Formula in the scaled variable t, e.g. "theta(t)*(t+1)*(t-0.5)*|1-t^2|^0*...".
  std::string describe() const;
};

}  // namespace dunkl
