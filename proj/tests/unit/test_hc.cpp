#include "doctest.h"

#include "cms/hc.hpp"

using namespace cms;

namespace {

const Scalar k = Scalar::param(kParamK);
const Scalar half = Scalar::rational(1, 2);

Poly lam(int i) { return Poly::variable(i); }
Poly c(const Scalar& s) { return Poly(s); }

}  // namespace

TEST_CASE("shifted recurrence for A with blocks (1,1)") {
  HCFamily hc(build_system(Family::A, 1, 1));
  CHECK(hc.y(0, 0) == c(Scalar(1)));
  // the first step already carries the shift (rho/2, v)
  CHECK(hc.y(0, 1) == lam(0) + c(half));
  CHECK(hc.y(1, 1) == lam(1) * k - c(k * half));
  Poly expect = lam(0) * lam(0) + lam(0) * half + lam(1) * (k * half) - c(k / Scalar(4));
  CHECK(hc.y(0, 2) == expect);
  CHECK(hc.image(1) == lam(0) + lam(1));
}

TEST_CASE("first step is the shifted pairing") {
  for (auto g : {build_system(Family::A, 2, 1), build_system(Family::BC, 1, 1)}) {
    HCFamily hc(g);
    GVec shift = hc_rho(*g);
    for (size_t v = 0; v < hc.orbit().size(); ++v) {
      Poly expect = lambda_pairing(*g, hc.orbit()[v]) + c(g->pairing(shift, hc.orbit()[v]));
      CHECK(hc.y(static_cast<int>(v), 1) == expect);
    }
  }
}

TEST_CASE("leading term of y is a power of the pairing") {
  auto g = build_system(Family::A, 2, 1);
  HCFamily hc(g);
  for (size_t v = 0; v < hc.orbit().size(); ++v) {
    Poly l = lambda_pairing(*g, hc.orbit()[v]), pw = c(Scalar(1));
    for (int p = 1; p <= 4; ++p) {
      pw = pw * l;
      CHECK(homogeneous_part(hc.y(static_cast<int>(v), p), p) == pw);
    }
  }
}

TEST_CASE("highest term of the images") {
  for (auto g : {build_system(Family::A, 2, 1), build_system(Family::A, 2, 2)}) {
    HCFamily hc(g);
    for (int r = 1; r <= 4; ++r) {
      Poly z = hc.image(r);
      CHECK(z.total_degree() == r);
      CHECK(homogeneous_part(z, r) == power_sum_top(*g, r));
    }
  }
}

TEST_CASE("BC images are even") {
  auto g = build_system(Family::BC, 1, 1);
  HCFamily hc(g);
  Poly z = hc.image(2);
  CHECK(compose(z, {-lam(0), lam(1)}) == z);
  CHECK(compose(z, {lam(0), -lam(1)}) == z);
  CHECK(w0_invariant(*g, z));
}

TEST_CASE("images are quasi-invariant") {
  for (auto g : {build_system(Family::A, 1, 1), build_system(Family::A, 2, 1), build_system(Family::BC, 1, 1)}) {
    CAPTURE(g->label());
    HCFamily hc(g);
    for (int p = 1; p <= 5; ++p) {
      std::string w;
      CHECK_MESSAGE(quasi_invariant(*g, hc.image(p), &w), w);
      CHECK(w0_invariant(*g, hc.image(p)));
    }
  }
}

TEST_CASE("non-invariant polynomials are rejected") {
  auto g = build_system(Family::A, 2, 1);
  std::string w;
  CHECK_FALSE(w0_invariant(*g, lam(0), &w));
  CHECK_FALSE(w.empty());
  w.clear();
  CHECK_FALSE(quasi_invariant(*g, lam(0) + lam(1), &w));
  CHECK_FALSE(w.empty());
  CHECK_FALSE(quasi_invariant_rational(*g, lam(0) * lam(2)));
}

TEST_CASE("operator-side homomorphism agrees with the recurrence") {
  auto g = build_system(Family::A, 1, 1);
  IntegralFamily fam(g, Model::Geometric);
  HCFamily hc(g);
  for (int p = 1; p <= 3; ++p) CHECK(operator_image(fam, p, hc_rho(*g)) == hc.image(p));
}

TEST_CASE("Bernoulli generators") {
  Poly x = lam(0);
  CHECK(bernoulli_polynomial(1) == x - c(half));
  CHECK(bernoulli_polynomial(2) == x * x - x + c(Scalar::rational(1, 6)));
  // B_r(x + 1) - B_r(x) = r x^(r-1)
  for (int r = 1; r <= 6; ++r) {
    Poly b = bernoulli_polynomial(r);
    Poly d = compose(b, {x + c(Scalar(1))}) - b;
    Poly expect = c(Scalar(r));
    for (int i = 1; i < r; ++i) expect = expect * x;
    CHECK(d == expect);
  }
  for (auto g : {build_system(Family::A, 1, 1), build_system(Family::A, 2, 1)}) {
    for (int r = 1; r <= 4; ++r) {
      Poly y = bernoulli_generator(*g, r);
      CHECK(quasi_invariant(*g, y));
      CHECK(w0_invariant(*g, y));
      CHECK(homogeneous_part(y, r) == power_sum_top(*g, r));
    }
  }
}

TEST_CASE("deformed power sums are rationally quasi-invariant") {
  auto g = build_system(Family::A, 2, 2);
  for (int r = 1; r <= 4; ++r) CHECK(quasi_invariant_rational(*g, power_sum_top(*g, r)));
}

TEST_CASE("expressing in generators") {
  auto g = build_system(Family::A, 2, 1);
  std::vector<Poly> gens{power_sum_top(*g, 1), power_sum_top(*g, 2)};
  Poly target = gens[0] * gens[0] + gens[1] * Scalar(3) + c(k);
  auto coeffs = express_in_generators(target, gens, 2);
  REQUIRE(coeffs.has_value());
  Poly back;
  // partitions of weight <= 2: (), (1), (2), (1,1)
  std::vector<Poly> basis{c(Scalar(1)), gens[0], gens[1], gens[0] * gens[0]};
  REQUIRE(coeffs->size() == basis.size());
  for (size_t i = 0; i < basis.size(); ++i) back += basis[i] * (*coeffs)[i];
  CHECK(back == target);
  CHECK_FALSE(express_in_generators(lam(0), gens, 2).has_value());
}

TEST_CASE("restriction to an imaginary hyperplane") {
  auto g = build_system(Family::A, 1, 1);
  // (e1 - e2, λ) = λ1 - k λ2
  Poly r = restrict_to_hyperplane(*g, lam(0) - lam(1) * k, GVec{1, -1});
  CHECK(r.is_zero());
}
