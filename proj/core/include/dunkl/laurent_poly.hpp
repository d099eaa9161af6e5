#pragma once

#include <cmath>
#include <concepts>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dunkl/errors.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// Finite Laurent polynomial sum_k c_k x^k with integer (possibly negative)
/// exponents. Zero coefficients are never stored.
///
/// The exact instantiation `LaurentPoly` (Rational coefficients) carries the
/// operator coefficients and all eigenpolynomials. `LaurentPolyD` is the
/// floating mirror for parameters that are not rational.
template <class Coeff>
class BasicLaurentPoly {
 public:
  using coefficient_type = Coeff;
  using Terms = std::map<int, Coeff>;

  BasicLaurentPoly() = default;

  /// Constant polynomial.
  BasicLaurentPoly(const Coeff& constant) {  // NOLINT(google-explicit-constructor)
    set(0, constant);
  }

  BasicLaurentPoly(std::initializer_list<std::pair<const int, Coeff>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  static BasicLaurentPoly monomial(int exponent, const Coeff& coefficient = Coeff(1)) {
    BasicLaurentPoly p;
    p.set(exponent, coefficient);
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Highest exponent; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  /// Lowest exponent; nullopt for the zero polynomial.
  std::optional<int> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  /// True when there are no negative powers (the zero polynomial counts).
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  Coeff coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff leading_coefficient() const {
    return terms_.empty() ? Coeff(0) : terms_.rbegin()->second;
  }

  bool is_monic() const { return !terms_.empty() && terms_.rbegin()->second == Coeff(1); }

  void set(int exponent, const Coeff& c) {
    if (c == Coeff(0)) {
      terms_.erase(exponent);
    } else {
      terms_[exponent] = c;
    }
  }

  void add_term(int exponent, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  BasicLaurentPoly& operator+=(const BasicLaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BasicLaurentPoly& operator-=(const BasicLaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  BasicLaurentPoly& operator*=(const Coeff& s) {
    if (s == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  BasicLaurentPoly operator-() const {
    BasicLaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend BasicLaurentPoly operator+(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a += b; }
  friend BasicLaurentPoly operator-(BasicLaurentPoly a, const BasicLaurentPoly& b) { return a -= b; }
  friend BasicLaurentPoly operator*(BasicLaurentPoly a, const Coeff& s) { return a *= s; }
  friend BasicLaurentPoly operator*(const Coeff& s, BasicLaurentPoly a) { return a *= s; }

  friend BasicLaurentPoly operator*(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    BasicLaurentPoly r;
    for (const auto& [i, ci] : a.terms_) {
      for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
    }
    return r;
  }

  friend bool operator==(const BasicLaurentPoly& a, const BasicLaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Termwise d/dx.
  BasicLaurentPoly derivative() const {
    BasicLaurentPoly r;
    for (const auto& [k, c] : terms_) {
      if (k != 0) r.terms_.emplace(k - 1, c * Coeff(k));
    }
    return r;
  }

  /// p(-x): the coefficient of x^k picks up (-1)^k.
  BasicLaurentPoly reflected() const {
    BasicLaurentPoly r = *this;
    for (auto& [k, c] : r.terms_) {
      if (k % 2 != 0) c = -c;
    }
    return r;
  }

  /// Floating evaluation: Horner in x over the nonnegative powers and Horner
  /// in 1/x over the negative ones.
  template <std::floating_point Real = double>
  Real evaluate(Real x) const {
    if (terms_.empty()) return Real(0);
    const int low = terms_.begin()->first;
    if (low < 0 && x == Real(0)) throw PoleAtZero();
    Real positive = 0;
    if (const int high = terms_.rbegin()->first; high >= 0) {
      auto it = terms_.rbegin();
      for (int k = high; k >= 0; --k) {
        Real c = 0;
        if (it != terms_.rend() && it->first == k) {
          c = to_real<Real>(it->second);
          ++it;
        }
        positive = positive * x + c;
      }
    }
    Real negative = 0;
    if (low < 0) {
      const Real inv = Real(1) / x;
      auto it = terms_.begin();
      for (int k = low; k < 0; ++k) {
        Real c = 0;
        if (it != terms_.end() && it->first == k) {
          c = to_real<Real>(it->second);
          ++it;
        }
        negative = negative * inv + c;
      }
      negative *= inv;
    }
    return positive + negative;
  }

  /// Exact evaluation at a rational point (exact path only).
  Coeff evaluate_exact(const Coeff& x) const
    requires std::same_as<Coeff, Rational>
  {
    if (terms_.empty()) return Coeff(0);
    const int low = terms_.begin()->first;
    if (low < 0 && x.is_zero()) throw PoleAtZero();
    // Horner over the shifted polynomial x^{-low} p(x), then undo the shift.
    const int high = terms_.rbegin()->first;
    mpq_class acc = 0;
    const mpq_class& xv = x.value();
    auto it = terms_.rbegin();
    for (int k = high; k >= low; --k) {
      acc *= xv;
      if (it != terms_.rend() && it->first == k) {
        acc += it->second.value();
        ++it;
      }
    }
    Coeff result{acc};
    if (low != 0) result *= pow(x, low);
    return result;
  }

  /// Sum of |c_k| |x|^k, the natural scale for rounding-error bounds.
  template <std::floating_point Real = double>
  Real abs_evaluate(Real x) const {
    Real s = 0;
    for (const auto& [k, c] : terms_) s += std::abs(to_real<Real>(c)) * std::pow(std::abs(x), k);
    return s;
  }

  /// Coefficient-wise conversion into another coefficient type.
  template <class Other, class Fn>
  BasicLaurentPoly<Other> map_coefficients(Fn&& fn) const {
    BasicLaurentPoly<Other> r;
    for (const auto& [k, c] : terms_) r.set(k, fn(c));
    return r;
  }

 private:
  template <class Real>
  static Real to_real(const Coeff& c) {
    if constexpr (std::same_as<Coeff, Rational>) {
      if constexpr (std::same_as<Real, long double>) {
        return c.to_long_double();
      } else {
        return static_cast<Real>(c.to_double());
      }
    } else {
      return static_cast<Real>(c);
    }
  }

  Terms terms_;
};

using LaurentPoly = BasicLaurentPoly<Rational>;
using LaurentPolyD = BasicLaurentPoly<double>;

/// A LaurentPoly without negative powers. Construction checks the invariant.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant) : p_(constant) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(LaurentPoly p);

  static Polynomial monomial(int exponent, const Rational& coefficient = Rational(1));
  /// Dense coefficients c_0 + c_1 x + ... .
  static Polynomial from_coefficients(std::initializer_list<Rational> coefficients);

  const LaurentPoly& laurent() const noexcept { return p_; }
  operator const LaurentPoly&() const noexcept { return p_; }  // NOLINT(google-explicit-constructor)

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return p_.degree().value_or(-1); }
  bool is_zero() const { return p_.is_zero(); }
  bool is_monic() const { return p_.is_monic(); }
  Rational coefficient(int k) const { return p_.coefficient(k); }
  Rational leading_coefficient() const { return p_.leading_coefficient(); }

  Polynomial reflected() const { return Polynomial(p_.reflected()); }
  Polynomial derivative() const { return Polynomial(p_.derivative()); }

  Polynomial& operator+=(const Polynomial& o) { p_ += o.p_; return *this; }
  Polynomial& operator-=(const Polynomial& o) { p_ -= o.p_; return *this; }
  Polynomial& operator*=(const Rational& s) { p_ *= s; return *this; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return Polynomial(a.p_ * b.p_);
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.p_ == b.p_; }

 private:
  LaurentPoly p_;
};

// Free-function spellings of the core operations.
inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly differentiate(const LaurentPoly& p) { return p.derivative(); }
inline LaurentPoly reflect(const LaurentPoly& p) { return p.reflected(); }
inline double evaluate(const LaurentPoly& p, double x) { return p.evaluate(x); }

/// Human-readable form, e.g. "2*x - 1 - 1/x".
std::string to_string(const LaurentPoly& p);

}  // namespace dunkl
