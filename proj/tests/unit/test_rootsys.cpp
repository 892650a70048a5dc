#include "doctest.h"

#include <algorithm>

#include "cms/rootsys.hpp"

using namespace cms;

namespace {

const Scalar k = Scalar::param(kParamK);

GVec e(int d, int i) {
  GVec v(d);
  v[i] = 1;
  return v;
}

GVec lin(const GVec& a, const GVec& b, int sb = 1) {
  GVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i] * Scalar(sb);
  return r;
}

std::vector<std::shared_ptr<GRS>> all_systems() {
  return {build_system(Family::A, 2, 1),  build_system(Family::A, 2, 2),  build_system(Family::A, 3, 2),
          build_system(Family::BC, 1, 1), build_system(Family::BC, 2, 1), build_system(Family::B, 1, 1),
          build_system(Family::C, 2, 1),  build_system(Family::C0, 1, 2), build_system(Family::D, 2, 1),
          build_system(Family::AB13),     build_system(Family::G12),      build_system(Family::D21)};
}

// Euclidean reflection on integer vectors, independent of GRS::reflect.
std::vector<long> euclid_reflect(const std::vector<long>& a, const std::vector<long>& v) {
  long av = 0, aa = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    av += a[i] * v[i];
    aa += a[i] * a[i];
  }
  std::vector<long> r = v;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= 2 * av * a[i] / aa;
  return r;
}

}  // namespace

TEST_CASE("A with blocks (2,1)") {
  auto g = build_system(Family::A, 2, 1);
  CHECK(g->roots().size() == 6);
  CHECK(g->label() == "A(2,1)");
  for (const Root& r : g->roots()) {
    bool mixed = r.v[2] != Scalar(0);
    CHECK(r.imaginary == mixed);
    if (mixed) CHECK(r.mult == Scalar(1));
  }
  CHECK(g->multiplicity(lin(e(3, 0), e(3, 1), -1)) == k);
}

TEST_CASE("BC(1,1) roots and the deformed form") {
  auto g = build_system(Family::BC, 1, 1);
  CHECK(g->roots().size() == 12);
  GVec e1 = e(2, 0), e2 = e(2, 1);
  for (const GVec& v : {lin(e1, e2), lin(e1, e2, -1), e1, e2, lin(e1, e1), lin(e2, e2)}) {
    CHECK(g->find_root(v) >= 0);
    GVec neg = v;
    for (auto& x : neg) x = -x;
    CHECK(g->find_root(neg) >= 0);
  }
  CHECK(g->pairing(lin(e1, e2), lin(e1, e2)) == Scalar(1) + k);
  CHECK(g->roots()[g->find_root(lin(e1, e2))].imaginary);
  CHECK_FALSE(g->roots()[g->find_root(e1)].imaginary);
}

TEST_CASE("D(2,1,lambda) with equal lambdas has equal multiplicities") {
  auto g = build_system(Family::D21);
  Scalar l = Scalar::param(kParamL1);
  auto h = g->specialize({{kParamL2, l}, {kParamL3, l}});
  Scalar m0 = h->multiplicity(lin(e(3, 0), e(3, 0)));
  CHECK(m0 == h->multiplicity(lin(e(3, 1), e(3, 1))));
  CHECK(m0 == h->multiplicity(lin(e(3, 2), e(3, 2))));
  CHECK(m0 == Scalar(3) * l / (Scalar(2) * l) - Scalar(1));
}

TEST_CASE("pairings") {
  auto g = build_system(Family::A, 2, 2);
  GVec a = lin(e(4, 0), e(4, 2), -1);
  // sum of squares in the x block plus k times the y block
  CHECK(g->pairing(a, a) == Scalar(1) + k);
  CHECK(g->pairing(e(4, 0), e(4, 0), Form::Euclidean) == Scalar(1));
  auto ab = build_system(Family::AB13);
  CHECK(ab->pairing(e(4, 3), e(4, 3)) == Scalar(3) * k);
}

TEST_CASE("reflections") {
  auto g = build_system(Family::A, 2, 2);
  CHECK(g->reflect(lin(e(4, 0), e(4, 1), -1), e(4, 0), Form::Euclidean) == e(4, 1));
  auto bc = build_system(Family::BC, 1, 1);
  GVec m1 = e(2, 0);
  m1[0] = -1;
  CHECK(bc->reflect(e(2, 0), e(2, 0), Form::Euclidean) == m1);

  GVec a = lin(e(4, 0), e(4, 2), -1), v = lin(e(4, 0), e(4, 1), -1);
  auto expect = euclid_reflect({1, 0, -1, 0}, {1, -1, 0, 0});
  GVec got = g->reflect(a, v, Form::Euclidean);
  for (int i = 0; i < 4; ++i) CHECK(got[i] == Scalar(static_cast<int>(expect[i])));
  CHECK(got == lin(e(4, 2), e(4, 1), -1));
  CHECK_THROWS(g->reflect(a, v, Form::Original));
}

TEST_CASE("homogeneous orbits") {
  auto a = build_system(Family::A, 2, 1);
  auto o = a->homogeneous_orbit();
  CHECK(o == std::vector<GVec>{e(3, 0), e(3, 1), e(3, 2)});
  auto bc = build_system(Family::BC, 1, 1);
  CHECK(bc->homogeneous_orbit().size() == 4);
  CHECK_THROWS(build_system(Family::G12)->homogeneous_orbit());

  for (auto g : {a, bc, build_system(Family::A, 2, 2), build_system(Family::BC, 2, 1)}) {
    int d = g->dim();
    GVec x(d);
    for (int i = 0; i < d; ++i) x[i] = Scalar::param(kParamL1 + i % 3) + Scalar(i);
    auto orbit = g->homogeneous_orbit();
    CHECK(orbit.size() == static_cast<size_t>(g->family() == Family::A ? d : 2 * d));
    for (const GVec& v : orbit) {
      Scalar lhs = g->pairing(x, v) * g->pairing(v, v, Form::Euclidean);
      Scalar rhs = g->pairing(x, v, Form::Euclidean) * g->pairing(v, v);
      CHECK(lhs == rhs);
      for (const Root& r : g->roots()) {
        GVec w = g->reflect(r.v, v, Form::Euclidean);
        CHECK(std::find(orbit.begin(), orbit.end(), w) != orbit.end());
      }
    }
  }
}

TEST_CASE("rho") {
  CHECK(build_system(Family::A, 1, 1)->rho() == GVec{1, -1});
  // k(e1 - e2) + (e1 - e3) + (e2 - e3)
  CHECK(build_system(Family::A, 2, 1)->rho() == GVec{k + Scalar(1), Scalar(1) - k, Scalar(-2)});
  Scalar p = Scalar::param(kParamP), q = Scalar::param(kParamQ);
  CHECK(build_system(Family::BC, 1, 0)->rho() == GVec{p + Scalar(2) * q});
}

TEST_CASE("lattice coordinates") {
  auto a = build_system(Family::A, 2, 1);
  for (int i = 0; i < 3; ++i) CHECK(a->lattice_basis()[i] == e(3, i));
  CHECK(a->lattice_coords(lin(e(3, 0), e(3, 1), -1)) == std::vector<int>{1, -1, 0});

  auto ab = build_system(Family::AB13);
  Scalar h = Scalar::rational(1, 2);
  CHECK(ab->lattice_basis()[3] == GVec{h, h, h, h});
  CHECK(ab->lattice_coords(GVec{h, h, h, h}) == std::vector<int>{0, 0, 0, 1});

  auto g = build_system(Family::G12);
  CHECK(g->lattice_coords(GVec{-1, -1, 0}) == std::vector<int>{-1, -1, 0});
  CHECK(g->find_root(GVec{-1, -1, 0}) >= 0);
}

TEST_CASE("structural invariants of every system") {
  for (auto g : all_systems()) {
    CAPTURE(g->label());
    const auto& roots = g->roots();
    const auto& basis = g->lattice_basis();
    for (const Root& a : roots) {
      GVec neg = a.v;
      for (auto& x : neg) x = -x;
      CHECK(g->find_root(neg) >= 0);
      if (a.imaginary) {
        // D(2,1,lambda) is isotropic on lambda_1 + lambda_2 + lambda_3 = 0
        Scalar n = g->pairing(a.v, a.v, Form::Original);
        if (g->family() == Family::D21)
          n = n.substitute(kParamL3, -Scalar::param(kParamL1) - Scalar::param(kParamL2));
        CHECK(n.is_zero());
        CHECK(a.mult == Scalar(1));
      }
      // every root is an integer combination of the lattice basis
      auto c = g->lattice_coords(a.v);
      GVec back(g->dim());
      for (size_t t = 0; t < basis.size(); ++t)
        for (int i = 0; i < g->dim(); ++i) back[i] += basis[t][i] * Scalar(c[t]);
      CHECK(back == a.v);
    }
    for (const Root& a : roots) {
      if (a.imaginary) continue;
      for (const Root& b : roots) {
        // closure under the original form and invariance of m and B
        CHECK(g->find_root(g->reflect(a.v, b.v, Form::Original)) >= 0);
        GVec s = g->reflect(a.v, b.v, Form::Deformed);
        REQUIRE(g->find_root(s) >= 0);
        CHECK(g->multiplicity(s) == b.mult);
        for (const Root& c : roots) {
          GVec t = g->reflect(a.v, c.v, Form::Deformed);
          CHECK(g->pairing(s, t) == g->pairing(b.v, c.v));
        }
      }
    }
  }
}

TEST_CASE("BC multiplicities satisfy the parameter relations") {
  auto g = build_system(Family::BC, 2, 1);
  Scalar p = g->multiplicity(e(3, 0)), q = g->multiplicity(lin(e(3, 0), e(3, 0)));
  Scalar r = g->multiplicity(e(3, 2)), s = g->multiplicity(lin(e(3, 2), e(3, 2)));
  CHECK((p - k * r).is_zero());
  CHECK((Scalar(2) * q + Scalar(1) - k * (Scalar(2) * s + Scalar(1))).is_zero());
}

TEST_CASE("bad sizes are rejected") {
  CHECK_THROWS_AS(build_system(Family::A, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_system(Family::D, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("E8"), std::invalid_argument);
  CHECK(parse_family("G12") == Family::G12);
}
