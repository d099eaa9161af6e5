#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Laurent polynomial with negative powers evaluated at x = 0.
class PoleAtZero : public Error {
 public:
  PoleAtZero() : Error("evaluation of a Laurent polynomial with negative powers at x = 0") {}
};

/// Operator application left negative powers of x in the image of a polynomial.
class NegativePowerResidue : public Error {
 public:
  explicit NegativePowerResidue(int valuation)
      : Error("operator image has a negative power x^" + std::to_string(valuation)),
        valuation_(valuation) {}
  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

/// Two eigenvalues coincide (or lambda_n = 0 for n >= 1), so the monic
/// eigenpolynomial of the offending degree is not uniquely determined.
class DegenerateSpectrum : public Error {
 public:
  DegenerateSpectrum(int index, const std::string& detail)
      : Error("degenerate spectrum at degree " + std::to_string(index) + ": " + detail),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class ParameterRange : public Error {
 public:
  using Error::Error;
};

class NotCanonicalizable : public Error {
 public:
  using Error::Error;
};

class NotSymmetrizable : public Error {
 public:
  using Error::Error;
};

class UnsupportedPoint : public Error {
 public:
  using Error::Error;
};

class NonIntegrable : public Error {
 public:
  using Error::Error;
};

class UnsupportedWeight : public Error {
 public:
  using Error::Error;
};

class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

/// A sampled check contradicted a hard-coded analytic verdict.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dunkl
