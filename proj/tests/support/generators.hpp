#pragma once

#include <random>
#include <vector>

#include "cms/diffop.hpp"
#include "cms/linalg.hpp"
#include "cms/ratfun.hpp"

namespace cms::testing {

/// Small random algebraic objects. Every generator draws from the engine
/// passed in, so a fixed seed fixes the whole instance sequence.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Integer polynomial in k and p with up to three terms of degree <= 2.
  ZPoly zpoly(bool nonzero = false) {
    for (;;) {
      std::vector<ZPoly::Term> ts;
      int n = integer(nonzero ? 1 : 0, 3);
      for (int i = 0; i < n; ++i) {
        Monomial m;
        m.set(kParamK, integer(0, 2));
        if (coin()) m.set(kParamP, integer(0, 1));
        ts.emplace_back(m, mpz_class(integer(-3, 3)));
      }
      ZPoly p = ZPoly::from_terms(std::move(ts));
      if (!nonzero || !p.is_zero()) return p;
    }
  }

  mpq_class rational() { return mpq_class(integer(-6, 6), integer(1, 4)); }

  Scalar scalar() {
    if (integer(0, 3) == 0) return Scalar(rational());
    return Scalar(zpoly(), zpoly(true));
  }
  Scalar nonzero_scalar() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  /// Polynomial in `nvars` variables with Scalar coefficients.
  Poly poly(int nvars, int max_terms = 3, int max_exp = 2) {
    std::vector<Poly::Term> ts;
    int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (int v = 0; v < nvars; ++v) m.set(v, integer(0, max_exp));
      ts.emplace_back(m, scalar());
    }
    return Poly::from_terms(std::move(ts));
  }

  /// rows x cols matrix of rank at most `rank_cap`, built as a product so
  /// that rank deficiency actually occurs.
  Matrix matrix(int rows, int cols, int rank_cap) {
    Matrix a(rows, rank_cap), b(rank_cap, cols), m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rank_cap; ++j) a(i, j) = integer(0, 2) ? Scalar(rational()) : scalar();
    for (int i = 0; i < rank_cap; ++i)
      for (int j = 0; j < cols; ++j) b(i, j) = integer(0, 2) ? Scalar(rational()) : Scalar(0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Scalar s;
        for (int t = 0; t < rank_cap; ++t) s += a(i, t) * b(t, j);
        m(i, j) = s;
      }
    return m;
  }

  /// Random element of Q(params)(z1, z2) over a basis holding the directions
  /// (1,0), (0,1), (1,-1), (1,1).
  RatFun ratfun(const FactorBasis* basis) {
    Poly num = poly(2, 3, 2);
    DenExps den;
    for (int i = 0; i < basis->size(); ++i)
      if (integer(0, 3) == 0) den.emplace_back(i, integer(1, 2));
    return RatFun::make(basis, num, den);
  }

  /// Operator of order <= 2 in two variables. Coefficients have rational
  /// numbers as coefficients and at most one denominator factor, which keeps
  /// triple products small.
  EulerOp op(const FactorBasis* basis) {
    EulerOp a(basis);
    int n = integer(1, 3);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      m.set(0, integer(0, 1));
      m.set(1, integer(0, 1));
      std::vector<Poly::Term> ts;
      for (int j = integer(1, 2); j > 0; --j) {
        Monomial x;
        x.set(0, integer(0, 1));
        x.set(1, integer(0, 1));
        ts.emplace_back(x, Scalar(rational()));
      }
      DenExps den;
      if (coin()) den.emplace_back(integer(0, basis->size() - 1), 1);
      a.add_term(m, RatFun::make(basis, Poly::from_terms(std::move(ts)), den));
    }
    return a;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Geometric basis in two variables with the four directions used by Gen.
inline std::unique_ptr<FactorBasis> small_basis(Model model = Model::Geometric) {
  auto b = std::make_unique<FactorBasis>(model, 2);
  for (std::vector<int> c : {std::vector<int>{1, 0}, {0, 1}, {1, -1}, {1, 1}}) b->add_direction(c);
  return b;
}

}  // namespace cms::testing
