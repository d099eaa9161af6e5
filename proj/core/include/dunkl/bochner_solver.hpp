#pragma once

#include <vector>

#include "dunkl/dunkl_operator.hpp"
#include "dunkl/laurent_poly.hpp"

namespace dunkl {

/// Monic eigenpolynomial P_n with L P_n = lambda P_n.
struct EigenPolynomial {
  int n = 0;
  Polynomial poly;
  Rational lambda;
};

/// Unique monic degree-n solution of L P = lambda_n P, found by
/// back-substitution on the upper-triangular matrix of L in the monomial
/// basis. Throws DegenerateSpectrum(n) if lambda_n coincides with some
/// lambda_m, m < n.
EigenPolynomial monic_eigenpolynomial(const DunklOperator& op, int n);

/// P_0, ..., P_N. The monomial images are computed once and shared.
std::vector<EigenPolynomial> eigen_sequence(const DunklOperator& op, int N);

/// L p - lambda p, exactly.
Polynomial residual(const DunklOperator& op, const Polynomial& p, const Rational& lambda);

}  // namespace dunkl
