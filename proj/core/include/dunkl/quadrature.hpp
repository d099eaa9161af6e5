#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "dunkl/dunkl_operator.hpp"
#include "dunkl/laurent_poly.hpp"
#include "dunkl/weight_function.hpp"

namespace dunkl {

struct QuadratureOptions {
  /// Gauss-Jacobi nodes in y = t^2; 0 selects max(40, deg p + deg q + 10).
  int order = 0;
  /// Accumulate in long double instead of double.
  bool extended_precision = false;
};

/// Positive-weight rule on the support of a -1-Jacobi weight. Each Jacobi
/// node y_k contributes the two mirrored x-nodes +-sqrt(y_k) (scaled back by
/// the weight's variable scale), so the rule has 2 * order nodes.
struct QuadratureRule {
  std::vector<double> nodes;  // ascending
  std::vector<double> weights;
  std::vector<long double> nodes_ext;
  std::vector<long double> weights_ext;
  WeightFunction target;
  int order = 0;

  std::size_t size() const { return nodes.size(); }
};

/// Throws UnsupportedWeight unless w is a big or little -1-Jacobi weight
/// (possibly rescaled), and NonIntegrable for alpha <= -1 or beta <= -1.
QuadratureRule quadrature_rule(const WeightFunction& w, int order);

/// p at every node of the rule, evaluated exactly at the floating node and
/// rounded once. Exact evaluation sidesteps the cancellation of Horner's
/// scheme for high-degree orthogonal polynomials.
std::vector<long double> node_values(const QuadratureRule& rule, const Polynomial& p,
                                     bool extended_precision = false);

double inner_product(const WeightFunction& w, const Polynomial& p, const Polynomial& q,
                     const QuadratureOptions& options = {});
double inner_product(const WeightFunction& w, const Polynomial& p, const Polynomial& q, int order);
double moment(const WeightFunction& w, int n, const QuadratureOptions& options = {});

enum class GramBasis { Eigen, Monomial, Custom };

struct GramMatrix {
  Eigen::MatrixXd entries;
  GramBasis basis = GramBasis::Custom;

  /// max over n != m of |G_nm| / sqrt(G_nn G_mm).
  double max_normalized_offdiagonal() const;
  /// Smallest diagonal entry.
  double min_diagonal() const;
};

/// G_nm = <p_n, p_m>_w. The polynomials are evaluated at the nodes in
/// parallel; each entry is summed in a fixed order, so the result does not
/// depend on scheduling.
GramMatrix gram_matrix(const WeightFunction& w, const std::vector<Polynomial>& polys,
                       const QuadratureOptions& options = {}, GramBasis basis = GramBasis::Custom);
GramMatrix gram_matrix(const WeightFunction& w, const std::vector<Polynomial>& polys, int order);

struct SymmetryTerms {
  double lhs = 0;       // <L V, W>
  double rhs = 0;       // <V, L W>
  double residual = 0;  // summed node by node, so V = W gives exactly 0
};

SymmetryTerms symmetry_terms(const WeightFunction& w, const DunklOperator& op, const Polynomial& V,
                             const Polynomial& W, const QuadratureOptions& options = {});
/// <L V, W> - <V, L W>
double symmetry_residual(const WeightFunction& w, const DunklOperator& op, const Polynomial& V,
                         const Polynomial& W, int order = 0);

struct RecurrenceEntry {
  int n = 0;
  double b = 0;
  /// u_n = h_n / h_{n-1}; absent for n = 0.
  std::optional<double> u;
  double h = 0;
};

/// x P_n = P_{n+1} + b_n P_n + u_n P_{n-1} for n = 0..N, using the supplied
/// monic orthogonal polynomials P_0..P_N. Throws NumericalBreakdown if
/// some h_n is not positive.
std::vector<RecurrenceEntry> recurrence_coefficients(const WeightFunction& w,
                                                     const std::vector<Polynomial>& monic,
                                                     int N, const QuadratureOptions& options = {});
/// Same, with P_n the exact eigenpolynomials of the -1-Jacobi operator
/// attached to w.
std::vector<RecurrenceEntry> recurrence_coefficients(const WeightFunction& w, int N, int order = 0);

}  // namespace dunkl
