#include "dunkl/weight_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

double exp_argument(const ExponentialFactor& e, double t) {
  const double base = t * t - e.shift;
  return e.power == 1 ? e.coefficient * base : e.coefficient / base;
}

std::string signed_term(double v) {
  v += 0.0;  // -0 prints as +0
  std::ostringstream os;
  if (v >= 0) {
    os << "+" << v;
  } else {
    os << "-" << -v;
  }
  return os.str();
}

}  // namespace

bool WeightFunction::evaluable_at(double x) const {
  const double t = variable_scale * x;
  if (!std::isfinite(t)) return false;
  if (t == 0.0 && (sign_factor || abs_power < 0)) return false;
  for (const auto& f : algebraic_factors) {
    if (f.constant + f.quadratic * t * t == 0.0 && f.exponent < 0) return false;
  }
  for (const auto& f : affine_factors) {
    if (t == f.root && f.multiplicity < 0) return false;
  }
  if (exponential_factor && exponential_factor->power == -1 &&
      t * t - exponential_factor->shift == 0.0) {
    return false;
  }
  return true;
}

double WeightFunction::value(double x) const {
  if (!evaluable_at(x)) throw UnsupportedPoint("weight is singular at x = " + std::to_string(x));
  const double t = variable_scale * x;
  double w = constant;
  if (sign_factor) w *= (t > 0 ? 1.0 : -1.0);
  for (const auto& f : affine_factors) w *= std::pow(t - f.root, f.multiplicity);
  if (abs_power != 0.0) w *= std::pow(std::abs(t), abs_power);
  for (const auto& f : algebraic_factors) {
    if (f.exponent != 0.0) w *= std::pow(std::abs(f.constant + f.quadratic * t * t), f.exponent);
  }
  if (exponential_factor) w *= std::exp(exp_argument(*exponential_factor, t));
  return w;
}

double WeightFunction::log_derivative(double x) const {
  if (!evaluable_at(x)) throw UnsupportedPoint("weight is singular at x = " + std::to_string(x));
  const double t = variable_scale * x;
  double d = 0;
  for (const auto& f : affine_factors) d += f.multiplicity / (t - f.root);
  if (abs_power != 0.0) d += abs_power / t;
  for (const auto& f : algebraic_factors) {
    if (f.exponent != 0.0) {
      d += f.exponent * 2.0 * f.quadratic * t / (f.constant + f.quadratic * t * t);
    }
  }
  if (exponential_factor) {
    const auto& e = *exponential_factor;
    const double base = t * t - e.shift;
    d += e.power == 1 ? e.coefficient * 2.0 * t : -e.coefficient * 2.0 * t / (base * base);
  }
  return variable_scale * d;
}

double WeightFunction::derivative(double x) const { return value(x) * log_derivative(x); }

bool WeightFunction::in_support_interior(double x) const {
  return std::any_of(support.begin(), support.end(),
                     [x](const Interval& iv) { return iv.contains_interior(x); });
}

bool WeightFunction::support_is_symmetric(double tol) const {
  for (const auto& iv : support) {
    const bool mirrored = std::any_of(support.begin(), support.end(), [&](const Interval& o) {
      return std::abs(o.lo + iv.hi) <= tol && std::abs(o.hi + iv.lo) <= tol;
    });
    if (!mirrored) return false;
  }
  return true;
}

std::string WeightFunction::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << constant;
  if (sign_factor) os << "*theta(t)";
  for (const auto& f : affine_factors) {
    os << "*(t" << signed_term(-f.root) << ")";
    if (f.multiplicity != 1) os << "^" << f.multiplicity;
  }
  if (abs_power != 0.0) os << "*|t|^" << abs_power;
  for (const auto& f : algebraic_factors) {
    os << "*|" << f.constant << signed_term(f.quadratic) << "*t^2|^" << f.exponent;
  }
  if (exponential_factor) {
    const auto& e = *exponential_factor;
    os << "*exp(" << e.coefficient << (e.power == 1 ? "*" : "/") << "(t^2";
    if (e.shift != 0.0) os << signed_term(-e.shift);
    os << "))";
  }
  if (variable_scale != 1.0) os << " with t=" << variable_scale << "*x";
  return os.str();
}

}  // namespace dunkl
