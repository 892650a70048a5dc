#include "doctest.h"

#include "cms/integrals.hpp"
#include "cms/lambda.hpp"
#include "cms/linalg.hpp"
#include "cms/poly.hpp"
#include "cms/ratfun.hpp"
#include "partition_oracle.hpp"

using namespace cms;

namespace {

const Scalar k = Scalar::param(kParamK);

Poly var(int i) { return Poly::variable(i); }

}  // namespace

TEST_CASE("scalar arithmetic") {
  CHECK(k / k == Scalar(1));
  CHECK(Scalar(1) / (k + Scalar(1)) + k / (k + Scalar(1)) == Scalar(1));
  CHECK_THROWS_AS(k / Scalar(0), std::domain_error);
  CHECK((k * k - Scalar(1)) / (k - Scalar(1)) == k + Scalar(1));
  CHECK(Scalar::rational(6, 4) == Scalar::rational(3, 2));
  CHECK(Scalar::rational(-1, 2).str() == "-1/2");
}

TEST_CASE("BC multiplicity relation eliminates q") {
  // (2q + 1)/(2s + 1) with q = (k(2s + 1) - 1)/2 is k; s sits in the p slot here.
  Scalar q = Scalar::param(kParamQ), s = Scalar::param(kParamP);
  Scalar expr = (Scalar(2) * q + Scalar(1)) / (Scalar(2) * s + Scalar(1));
  Scalar qv = (k * (Scalar(2) * s + Scalar(1)) - Scalar(1)) / Scalar(2);
  CHECK(expr.substitute(kParamQ, qv) == k);
}

TEST_CASE("substitution") {
  Poly x = var(0), y = var(1);
  CHECK(substitute(x * x - y * y, 1, x).is_zero());
  CHECK(substitute(x + y * k.inverse(), 1, Poly()) == x);
  // (d/dx - k d/dy)(x + y/k) restricted to y = x
  Poly f = x + y * k.inverse();
  Poly d = f.partial(0) - f.partial(1) * k;
  CHECK(substitute(d, 1, x).is_zero());
}

TEST_CASE("scalar substitution is sequential") {
  Scalar p = Scalar::param(kParamP);
  std::map<int, Scalar> swap{{kParamK, p}, {kParamP, k}};
  // k -> p first, then every p (including the new one) -> k
  CHECK((k - p).substitute(swap) == Scalar(0));
}

TEST_CASE("rational functions decide zero exactly") {
  FactorBasis b(Model::Geometric, 1);
  b.add_direction({1});
  int minus = b.find({1}, FactorBasis::kMinusOne);
  REQUIRE(minus >= 0);
  Poly z = var(0);
  RatFun f = RatFun::make(&b, z * z - Poly(Scalar(1)), {{minus, 1}});
  CHECK((f - RatFun(&b, z + Poly(Scalar(1)))).is_zero());
  CHECK_FALSE(RatFun::make(&b, z + Poly(Scalar(1)), {{minus, 1}}).is_zero());
}

TEST_CASE("empty main-identity sum vanishes") {
  auto g = build_system(Family::A, 1, 1);
  CHECK(main_identity_sum(*g, Model::Geometric).is_zero());
  CHECK(main_identity(*g, Model::Affine).holds);
}

TEST_CASE("nullspace dimension") {
  Matrix id(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  CHECK(nullspace_dim(id) == 0);
  CHECK(nullspace_dim(Matrix(3, 4)) == 4);
  CHECK(rank(Matrix(3, 4)) == 0);

  // Degree-2 part of the (1,1) algebra on the basis x^2, xy, y^2: the only
  // condition is (d/dx - k d/dy) f = 0 on y = x, i.e. [2, 1 - k, -2k].
  Matrix m(1, 3);
  m(0, 0) = 2;
  m(0, 1) = Scalar(1) - k;
  m(0, 2) = Scalar(-2) * k;
  CHECK(nullspace_dim(m) == 2);
  CHECK(oracle::hook_count(1, 1, 2) == 2);
  CHECK(component_dimension(1, 1, 2) == 2);
}

TEST_CASE("solve and nullspace over Q(k)") {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = k;
  m(1, 1) = 1;
  m(1, 2) = k + Scalar(1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (int i = 0; i < 2; ++i) {
    Scalar s;
    for (int j = 0; j < 3; ++j) s += m(i, j) * ns[0][j];
    CHECK(s.is_zero());
  }
  auto x = solve(m, {Scalar(1), Scalar(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + k * (*x)[1] == Scalar(1));
  Matrix z(1, 1);
  CHECK_FALSE(solve(z, {Scalar(1)}).has_value());
}

TEST_CASE("polynomial gcd and exact division") {
  ZPoly a = ZPoly::variable(kParamK) + ZPoly(mpz_class(1));
  ZPoly b = ZPoly::variable(kParamK) - ZPoly(mpz_class(1));
  CHECK(gcd(a * b, a * a) == a);
  CHECK(divide_exact(a * b, b) == a);
  ZPoly q;
  CHECK_FALSE(try_divide(a, b, q));
}

TEST_CASE("canonical rendering") {
  VarNames names{"x", "y"};
  Poly p = var(0) * var(0) * Scalar(3) - var(1) + Poly(Scalar::rational(1, 2));
  CHECK(render(p, names) == "3*x^2 - y + 1/2");
  CHECK(render(Poly(), names) == "0");
  CHECK((Scalar(1) / (k + Scalar(1))).str() == "1/(k + 1)");
}
