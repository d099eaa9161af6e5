#include "dunkl/laurent_poly.hpp"

#include <sstream>

namespace dunkl {

Polynomial::Polynomial(LaurentPoly p) : p_(std::move(p)) {
  if (!p_.is_polynomial()) {
    throw NegativePowerResidue(*p_.valuation());
  }
}

Polynomial Polynomial::monomial(int exponent, const Rational& coefficient) {
  if (exponent < 0) throw Error("polynomial monomial with negative exponent");
  return Polynomial(LaurentPoly::monomial(exponent, coefficient));
}

Polynomial Polynomial::from_coefficients(std::initializer_list<Rational> coefficients) {
  LaurentPoly p;
  int k = 0;
  for (const auto& c : coefficients) p.set(k++, c);
  return Polynomial(std::move(p));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int k = it->first;
    Rational c = it->second;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (k == 0) {
      os << c;
    } else if (k > 0) {
      if (c != Rational(1)) os << c << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    } else {
      if (c.is_integer()) {
        os << c << "/x";
      } else {
        os << "(" << c << ")/x";
      }
      if (k < -1) os << "^" << -k;
    }
  }
  return os.str();
}

}  // namespace dunkl
