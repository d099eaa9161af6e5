#include "dunkl/bochner_solver.hpp"

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

/// Images L x^k for k = 0..N, checked to be triangular (deg L x^k <= k).
class MonomialImages {
 public:
  MonomialImages(const DunklOperator& op, int N) {
    images_.reserve(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
      LaurentPoly q = op.apply_laurent(LaurentPoly::monomial(k));
      if (!q.is_polynomial()) throw NegativePowerResidue(*q.valuation());
      if (q.degree().value_or(0) > k) {
        throw Error("operator raises the degree of x^" + std::to_string(k) +
                    "; the monomial matrix is not triangular");
      }
      images_.push_back(std::move(q));
    }
  }

  Rational diagonal(int k) const { return images_[static_cast<std::size_t>(k)].coefficient(k); }
  const LaurentPoly& image(int k) const { return images_[static_cast<std::size_t>(k)]; }

  EigenPolynomial solve(int n) const {
    const Rational lambda = diagonal(n);
    for (int m = 0; m < n; ++m) {
      if (diagonal(m) == lambda) {
        throw DegenerateSpectrum(n, "lambda_" + std::to_string(n) + " = lambda_" +
                                        std::to_string(m) + " = " + lambda.str());
      }
    }
    // Coefficients a_0..a_n with a_n = 1. Row j of (L - lambda) P = 0 reads
    // (lambda_j - lambda) a_j + sum_{k>j} [x^j] (L x^k) a_k = 0.
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    a[static_cast<std::size_t>(n)] = Rational(1);
    for (int j = n - 1; j >= 0; --j) {
      Rational acc;
      for (int k = j + 1; k <= n; ++k) {
        const auto& ak = a[static_cast<std::size_t>(k)];
        if (ak.is_zero()) continue;
        const Rational m = image(k).coefficient(j);
        if (!m.is_zero()) acc += m * ak;
      }
      if (!acc.is_zero()) {
        a[static_cast<std::size_t>(j)] = -acc / (diagonal(j) - lambda);
      }
    }
    LaurentPoly p;
    for (int k = 0; k <= n; ++k) p.set(k, a[static_cast<std::size_t>(k)]);
    return EigenPolynomial{n, Polynomial(std::move(p)), lambda};
  }

 private:
  std::vector<LaurentPoly> images_;
};

}  // namespace

EigenPolynomial monic_eigenpolynomial(const DunklOperator& op, int n) {
  if (n < 0) throw Error("monic_eigenpolynomial: negative degree");
  return MonomialImages(op, n).solve(n);
}

std::vector<EigenPolynomial> eigen_sequence(const DunklOperator& op, int N) {
  if (N < 0) throw Error("eigen_sequence: negative degree");
  const MonomialImages images(op, N);
  std::vector<EigenPolynomial> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.push_back(images.solve(n));
  return out;
}

Polynomial residual(const DunklOperator& op, const Polynomial& p, const Rational& lambda) {
  return apply(op, p) - lambda * p;
}

}  // namespace dunkl
