#include "doctest.h"

#include "cms/integrals.hpp"

using namespace cms;

namespace {

const Scalar k = Scalar::param(kParamK);

EulerOp E(const FactorBasis* b, int t) { return EulerOp::derivation(b, t); }

}  // namespace

TEST_CASE("main identity holds for the deformed systems") {
  for (auto g : {build_system(Family::A, 2, 1), build_system(Family::BC, 1, 1), build_system(Family::G12)}) {
    CAPTURE(g->label());
    for (Model model : {Model::Geometric, Model::Affine}) {
      auto r = main_identity(*g, model);
      CHECK(r.holds);
      CHECK(r.residue.empty());
    }
  }
}

TEST_CASE("perturbed multiplicities break the main identity") {
  auto g = build_system(Family::A, 2, 1);
  int real = g->find_root(GVec{1, -1, 0}), imag = g->find_root(GVec{1, 0, -1});
  for (int i : {real, imag}) {
    auto h = g->with_multiplicity(i, g->roots()[i].mult + Scalar(1));
    auto r = main_identity(*h, Model::Geometric);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.residue.empty());
  }
}

TEST_CASE("second-level operator for A with blocks (1,1)") {
  auto g = build_system(Family::A, 1, 1);
  IntegralFamily fam(g, Model::Geometric);
  const FactorBasis* b = g->factor_basis(Model::Geometric);
  RatFun f = half_f(b, {1, -1});
  int e1 = fam.orbit_index(GVec{1, 0});
  EulerOp d1 = E(b, 0), d2 = E(b, 1) * k;
  CHECK(fam.nabla(e1, 2) == d1.compose(d1) - (d1 - d2).left_multiply(f));
  // L_2 = d_1^2 + d_2^2 / k - 2 f d_(e1 - e2)
  EulerOp L2 = d1.compose(d1) + d2.compose(d2) * k.inverse() - (d1 - d2).left_multiply(f) * Scalar(2);
  CHECK(fam.integral(2) == L2);
  CHECK(fam.integral(2) == -build_radial(*g, Model::Geometric, Normalization::Half));
}

TEST_CASE("first integral is the total momentum") {
  auto g = build_system(Family::A, 2, 1);
  IntegralFamily fam(g, Model::Geometric);
  const FactorBasis* b = g->factor_basis(Model::Geometric);
  CHECK(fam.integral(1) == E(b, 0) + E(b, 1) + E(b, 2));
}

TEST_CASE("odd integrals of BC vanish") {
  IntegralFamily fam(build_system(Family::BC, 1, 1), Model::Geometric);
  CHECK(fam.integral(1).is_zero());
  CHECK(fam.integral(3).is_zero());
  CHECK_FALSE(fam.integral(2).is_zero());
}

TEST_CASE("commutator relation") {
  for (auto g : {build_system(Family::A, 1, 2), build_system(Family::BC, 1, 1)}) {
    CAPTURE(g->label());
    for (Model model : {Model::Geometric, Model::Affine}) {
      IntegralFamily fam(g, model);
      for (size_t v = 0; v < fam.orbit().size(); ++v) CHECK(fam.commutator_relation_defect(v, 2).is_zero());
    }
  }
}

TEST_CASE("integrals commute") {
  IntegralFamily a(build_system(Family::A, 2, 1), Model::Geometric);
  CHECK(a.commutator(2, 3).is_zero());
  CHECK(a.commutator(1, 3).is_zero());
  IntegralFamily bc(build_system(Family::BC, 1, 1), Model::Geometric);
  CHECK(bc.commutator(2, 4).is_zero());
  IntegralFamily aff(build_system(Family::A, 2, 1), Model::Affine);
  CHECK(aff.commutator(2, 3).is_zero());
}

TEST_CASE("top symbols are independent") {
  IntegralFamily a(build_system(Family::A, 2, 1), Model::Geometric);
  CHECK(a.independent_symbols({1, 2, 3}) == 3);
  CHECK(a.independent_symbols({2, 2}) == 1);
  // symbol of L_1 is xi_1 + xi_2 + xi_3
  Poly s = a.top_symbol(1);
  CHECK(s == Poly::variable(0) + Poly::variable(1) + Poly::variable(2));
  IntegralFamily bc(build_system(Family::BC, 2, 1), Model::Geometric);
  CHECK(bc.independent_symbols({2, 4, 6}) == 3);
}
