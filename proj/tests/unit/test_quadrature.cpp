#include <gtest/gtest.h>

#include <cmath>

#include "dunkl/bochner_solver.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/jacobi_m1.hpp"
#include "dunkl/quadrature.hpp"
#include "oracles/oracles.hpp"

using namespace dunkl;

namespace {

Polynomial X(int k) { return Polynomial::monomial(k); }

std::vector<Polynomial> eigen_polys(const OperatorParams& p, int N) {
  std::vector<Polynomial> out;
  for (auto& e : eigen_sequence(build(p), N)) out.push_back(e.poly);
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(InnerProduct, LittleLinearWeight) {
  const WeightFunction w = little_weight(1, 0);
  EXPECT_NEAR(inner_product(w, X(0), X(0)), 2.0, 1e-14);
  EXPECT_NEAR(inner_product(w, X(0), X(1)), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(inner_product(w, X(0), X(1) - Polynomial(Rational(1, 3))), 0.0, 1e-14);
}

TEST(Moment, LittleMatchesBetaFunctions) {
  EXPECT_NEAR(moment(little_weight(1, 0), 0), 2.0, 1e-14);
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    for (double b : {0.0, 0.5, 1.0, 2.0}) {
      const WeightFunction w = little_weight(a, b);
      for (int n = 0; n <= 40; ++n) {
        const double expected = static_cast<double>(oracle::little_moment(a, b, n));
        EXPECT_LE(rel(moment(w, n), expected), 1e-12) << a << " " << b << " " << n;
      }
    }
  }
}

TEST(Moment, ExactUpToTheRuleDegree) {
  // 40 Jacobi nodes in y integrate x-polynomials of degree up to 4*40 - 3.
  const WeightFunction w = little_weight(0.5, 1.5);
  for (int n : {100, 140, 157}) {
    const double expected = static_cast<double>(oracle::little_moment(0.5L, 1.5L, n));
    EXPECT_LE(rel(moment(w, n, {40, true}), expected), 1e-12) << n;
  }
}

TEST(InnerProduct, BigMatchesTheTanhSinhReference) {
  for (const BigJacobiParams& b :
       {BigJacobiParams{1, 1, Rational(1, 2)}, BigJacobiParams{0, 0, Rational(1, 4)},
        BigJacobiParams{Rational(1, 2), 2, Rational(3, 4)}, BigJacobiParams{2, Rational(1, 2), Rational(1, 4)}}) {
    const WeightFunction w = big_weight(b);
    const auto polys = eigen_polys(big_operator(b), 6);
    for (std::size_t i = 0; i < polys.size(); i += 2) {
      for (std::size_t j = 0; j < polys.size(); j += 3) {
        const double q = inner_product(w, polys[i], polys[j]);
        const long double ref = oracle::big_inner_product(
            b.alpha.to_long_double(), b.beta.to_long_double(), b.c.to_long_double(), polys[i].laurent(),
            polys[j].laurent());
        const double scale = std::sqrt(inner_product(w, polys[i], polys[i]) * inner_product(w, polys[j], polys[j]));
        EXPECT_LE(std::abs(q - static_cast<double>(ref)), 1e-12 * scale) << i << " " << j;
      }
    }
  }
}

TEST(Moment, TwoIntervalsAgreeWithTheFoldedIntegral) {
  // int over [-1,-c] U [c,1] equals int_c^1 s^n (w(s) + (-1)^n w(-s)) ds.
  const long double alpha = 1.5L, beta = 0.5L, c = 0.5L;
  const WeightFunction w = big_weight({Rational(3, 2), Rational(1, 2), Rational(1, 2)});
  for (int n = 0; n <= 8; ++n) {
    auto folded = [&](long double s, long double to_a, long double to_b) {
      const long double common = std::pow(to_b * (1 + s), (alpha - 1) / 2) * std::pow(to_a * (s + c), (beta - 1) / 2);
      const long double plus = (s + 1) * to_a * common;
      const long double minus = to_b * (s + c) * common;
      return std::pow(s, n) * (plus + (n % 2 ? -1.0L : 1.0L) * minus);
    };
    const long double ref = oracle::tanh_sinh(folded, c, 1.0L).value;
    EXPECT_LE(std::abs(moment(w, n) - static_cast<double>(ref)), 1e-12 * std::abs(static_cast<double>(ref)) + 1e-15) << n;
  }
}

TEST(QuadratureRule, NodesAreInteriorAndWeightsPositive) {
  const WeightFunction w = big_weight({0, 0, Rational(1, 4)});
  const QuadratureRule r = quadrature_rule(w, 30);
  ASSERT_EQ(r.size(), 60u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_TRUE(w.in_support_interior(r.nodes[i])) << r.nodes[i];
    EXPECT_GT(r.weights[i], 0.0);
  }
}

TEST(QuadratureRule, RejectsUnsupportedWeights) {
  const auto ii = classify(case_ii_operator(1, 1));
  EXPECT_THROW(inner_product(*ii.weight, X(0), X(0)), UnsupportedWeight);
  // alpha = -3/2 still yields the closed form, but it is not integrable.
  const auto v = classify(big_operator({Rational(-3, 2), 0, Rational(1, 2)}));
  ASSERT_TRUE(v.weight.has_value());
  EXPECT_FALSE(v.positive_on_symmetric_support);
  EXPECT_THROW(inner_product(*v.weight, X(0), X(0)), NonIntegrable);
}

TEST(Gram, LittleEigenpolynomials) {
  const WeightFunction w = little_weight(1, 0);
  const GramMatrix g = gram_matrix(w, eigen_polys(little_operator(1, 0), 1));
  EXPECT_NEAR(g.entries(0, 0), 2.0, 1e-14);
  EXPECT_GT(g.entries(1, 1), 0.0);
  EXPECT_LE(std::abs(g.entries(0, 1)), 1e-12 * std::sqrt(g.entries(0, 0) * g.entries(1, 1)));
}

TEST(Gram, MonomialsFormAHankelMatrixOfMoments) {
  const WeightFunction w = little_weight(1, 0);
  const GramMatrix g = gram_matrix(w, {X(0), X(1), X(2)}, {}, GramBasis::Monomial);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(g.entries(i, j), static_cast<double>(oracle::little_moment(1, 0, i + j)), 1e-14);
    }
  }
  const GramMatrix one = gram_matrix(w, {X(0)});
  ASSERT_EQ(one.entries.rows(), 1);
  EXPECT_NEAR(one.entries(0, 0), 2.0, 1e-14);
}

TEST(Gram, BitwiseReproducible) {
  const OperatorParams p = big_operator({Rational(1, 2), 2, Rational(1, 4)});
  const WeightFunction w = big_weight({Rational(1, 2), 2, Rational(1, 4)});
  const auto polys = eigen_polys(p, 12);
  const GramMatrix a = gram_matrix(w, polys);
  const GramMatrix b = gram_matrix(w, polys);
  EXPECT_TRUE((a.entries.array() == b.entries.array()).all());
}

TEST(Gram, ExtendedPrecisionAgrees) {
  const OperatorParams p = big_operator({2, 2, Rational(3, 4)});
  const WeightFunction w = big_weight({2, 2, Rational(3, 4)});
  const auto polys = eigen_polys(p, 15);
  const GramMatrix a = gram_matrix(w, polys);
  const GramMatrix b = gram_matrix(w, polys, {0, true});
  for (int n = 0; n <= 15; ++n) EXPECT_LE(rel(a.entries(n, n), b.entries(n, n)), 1e-13);
  EXPECT_LE(b.max_normalized_offdiagonal(), 1e-14);
}

TEST(Symmetry, BigExample) {
  const OperatorParams p = big_operator({1, 1, Rational(1, 2)});
  const WeightFunction w = big_weight({1, 1, Rational(1, 2)});
  EXPECT_LE(std::abs(symmetry_residual(w, build(p), X(1), X(2))), 1e-10);
  EXPECT_EQ(symmetry_residual(w, build(p), X(3), X(3)), 0.0);
}

TEST(Symmetry, MismatchedWeightIsDetected) {
  const OperatorParams p = big_operator({1, 1, Rational(1, 2)});
  const SymmetryTerms t = symmetry_terms(little_weight(1, 1), build(p), X(1), X(2));
  EXPECT_GT(std::abs(t.residual), 1e-3 * (std::abs(t.lhs) + std::abs(t.rhs)));
}

TEST(Recurrence, LittleFirstCoefficient) {
  const auto table = recurrence_coefficients(little_weight(1, 0), 3);
  EXPECT_NEAR(table[0].b, 1.0 / 3.0, 1e-14);
  EXPECT_FALSE(table[0].u.has_value());
  const auto zero = recurrence_coefficients(little_weight(1, 0), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_FALSE(zero[0].u.has_value());
}

TEST(Recurrence, BigPositiveAndMatchesExactRecurrence) {
  const BigJacobiParams b{1, 1, Rational(1, 2)};
  const auto table = recurrence_coefficients(big_weight(b), 10);
  std::vector<LaurentPoly> monic;
  for (const auto& p : eigen_polys(big_operator(b), 11)) monic.push_back(p.laurent());
  const auto exact = oracle::exact_recurrence(monic);
  EXPECT_TRUE(exact.three_term);
  for (int n = 0; n <= 10; ++n) {
    const auto& e = table[static_cast<std::size_t>(n)];
    EXPECT_NEAR(e.b, exact.b[static_cast<std::size_t>(n)].to_double(), 1e-12);
    if (n > 0) {
      ASSERT_TRUE(e.u.has_value());
      EXPECT_GT(*e.u, 0.0);
      EXPECT_LE(rel(*e.u, exact.u[static_cast<std::size_t>(n)].to_double()), 1e-11);
    }
  }
}

TEST(Recurrence, ScaledWeightScalesTheCoefficients) {
  const OperatorParams base = big_operator({Rational(1, 2), 1, Rational(1, 3)});
  const Rational k1(5, 2);
  const auto verdict = classify(scale_params(base, Rational(1), k1));
  ASSERT_TRUE(verdict.weight.has_value());
  const auto scaled = recurrence_coefficients(*verdict.weight, 5);
  const auto unit = recurrence_coefficients(big_weight({Rational(1, 2), 1, Rational(1, 3)}), 5);
  const double s = k1.to_double();
  for (int n = 0; n <= 5; ++n) {
    // The weight lives in t = x / kappa1 of the scaled operator's variable.
    EXPECT_NEAR(scaled[n].b, unit[n].b * s, 1e-12);
    if (n > 0) EXPECT_LE(rel(*scaled[n].u, *unit[n].u * s * s), 1e-12);
  }
}
