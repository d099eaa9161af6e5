#pragma once

#include <vector>

namespace dunkl {

/// Gauss rule for the weight (1-t)^a (1+t)^b on [-1,1], a, b > -1.
struct GaussJacobiRule {
  std::vector<long double> nodes;  // ascending
  std::vector<long double> weights;
};

/// n-point rule: Golub-Welsch starting values refined by Newton iteration on
/// the Jacobi recurrence in long double. Exact for polynomials of degree
/// 2n - 1.
GaussJacobiRule gauss_jacobi(int n, long double a, long double b);

}  // namespace dunkl
