#include "dunkl/gauss_jacobi.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

struct JacobiValue {
  long double p;      // P_n^{(a,b)}(t)
  long double dp;     // derivative
};

JacobiValue jacobi_eval(int n, long double a, long double b, long double t) {
  long double prev = 1.0L;
  long double cur = ((a + b + 2.0L) * t + (a - b)) / 2.0L;
  if (n == 0) return {1.0L, 0.0L};
  for (int k = 2; k <= n; ++k) {
    const long double s = 2.0L * k + a + b;
    const long double next =
        ((s - 1.0L) * (s * (s - 2.0L) * t + a * a - b * b) * cur -
         2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s * prev) /
        (2.0L * k * (k + a + b) * (s - 2.0L));
    prev = cur;
    cur = next;
  }
  const long double s = 2.0L * n + a + b;
  const long double dp =
      (n * ((a - b) - s * t) * cur + 2.0L * (n + a) * (n + b) * prev) / (s * (1.0L - t * t));
  return {cur, dp};
}

std::vector<double> golub_welsch_nodes(int n, double a, double b) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      diag(k) = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double s = 2.0 * k + ab;
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalBreakdown("Golub-Welsch eigensolve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

GaussJacobiRule gauss_jacobi(int n, long double a, long double b) {
  if (n < 1) throw Error("gauss_jacobi: need at least one node");
  if (!(a > -1.0L) || !(b > -1.0L)) throw NonIntegrable("gauss_jacobi: exponents must exceed -1");

  const std::vector<double> guess =
      golub_welsch_nodes(n, static_cast<double>(a), static_cast<double>(b));
  const long double log_scale = std::lgamma(n + a + 1.0L) + std::lgamma(n + b + 1.0L) -
                                std::lgamma(n + a + b + 1.0L) - std::lgamma(n + 1.0L) +
                                (a + b + 1.0L) * std::log(2.0L);
  GaussJacobiRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double t = guess[static_cast<std::size_t>(i)];
    JacobiValue v{};
    for (int it = 0; it < 20; ++it) {
      v = jacobi_eval(n, a, b, t);
      const long double step = v.p / v.dp;
      t -= step;
      if (std::fabs(step) <= 4.0L * std::numeric_limits<long double>::epsilon() * std::fabs(t)) break;
    }
    v = jacobi_eval(n, a, b, t);
    if (!(std::fabs(t) < 1.0L) || !std::isfinite(v.dp) || v.dp == 0.0L) {
      throw NumericalBreakdown("gauss_jacobi: Newton refinement left [-1,1] at node " +
                               std::to_string(i));
    }
    rule.nodes[static_cast<std::size_t>(i)] = t;
    rule.weights[static_cast<std::size_t>(i)] =
        std::exp(log_scale) / ((1.0L - t * t) * v.dp * v.dp);
  }
  return rule;
}

}  // namespace dunkl
