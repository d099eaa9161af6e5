#include "dunkl/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");
  const std::string_view whole = text;

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), whole);
    const mpz_class den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  // Decimal with optional exponent.
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ez = parse_integer(text.substr(e + 1), whole);
    if (!ez.fits_slong_p() || abs(ez) > 100000) {
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = ez.get_si();
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto ip = text.substr(0, dot);
    const auto fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    fraction_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = exponent - fraction_digits;
  mpq_class q;
  if (scale >= 0) {
    q = mpq_class(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    q = mpq_class(mantissa, pow10(static_cast<unsigned long>(-scale)));
  }
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error("cannot convert a non-finite double to a rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

Rational Rational::from_long_double(long double value) {
  if (!std::isfinite(value)) throw Error("cannot convert a non-finite value to a rational");
  if (value == 0.0L) return Rational();
  int e = 0;
  const long double m = std::frexp(value, &e);  // value = m * 2^e, 0.5 <= |m| < 1
  constexpr int kBits = std::numeric_limits<long double>::digits;
  const long double scaled = std::ldexp(std::fabs(m), kBits);
  const auto mantissa = static_cast<std::uint64_t>(scaled);
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mantissa), 0, 0, &mantissa);
  if (m < 0) z = -z;
  mpq_class q(z);
  const int shift = e - kBits;
  if (shift >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return Rational(q);
}

namespace {

// Correctly rounded |num/den| as Float: the integer quotient carries `bits`
// significant bits plus a sticky bit, and the final integer-to-float
// conversion rounds to nearest.
template <class Float, class UInt>
Float round_quotient(const mpq_class& q, long bits) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num == 0) return Float(0);
  const long shift = bits - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const mpz_class magnitude_num = abs(num);
  mpz_class scaled = magnitude_num;
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else if (shift < 0) {
    mpz_tdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  mpz_class quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  quotient <<= 1;
  if (remainder != 0 || (shift < 0 && mpz_scan1(magnitude_num.get_mpz_t(), 0) < static_cast<mp_bitcnt_t>(-shift))) {
    quotient += 1;
  }
  UInt word = 0;
  size_t count = 0;
  mpz_export(&word, &count, -1, sizeof(word), 0, 0, quotient.get_mpz_t());
  const Float magnitude = std::ldexp(static_cast<Float>(word), static_cast<int>(-shift - 1));
  return sgn(num) < 0 ? -magnitude : magnitude;
}

__extension__ typedef unsigned __int128 UInt128;

}  // namespace

double Rational::to_double() const { return round_quotient<double, std::uint64_t>(q_, 62); }

long double Rational::to_long_double() const {
  return round_quotient<long double, UInt128>(q_, 126);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, int k) {
  if (k < 0) return Rational(1) / pow(r, -k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.value().get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), r.value().get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dunkl
