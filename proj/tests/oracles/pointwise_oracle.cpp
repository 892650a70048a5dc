#include "pointwise_oracle.hpp"

#include <stdexcept>

namespace cms::oracle {

namespace {

mpq_class power(const mpq_class& x, int e) {
  mpq_class r = 1, b = e < 0 ? mpq_class(1 / x) : x;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

bool proportional(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

PointwiseOracle::PointwiseOracle(const GRS& g, std::map<int, Scalar> params) : g_(g), params_(std::move(params)) {
  std::vector<GVec> vs;
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    GVec two = a.v;
    for (auto& x : two) x *= Scalar(2);
    pos_.push_back({a.lattice, value(a.mult), value(g.multiplicity(two)), value(g.pairing(a.v, a.v))});
    vs.push_back(a.v);
  }
  pair_.assign(vs.size(), std::vector<mpq_class>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) pair_[i][j] = value(g.pairing(vs[i], vs[j]));
  const auto& b = g.lattice_basis();
  gram_.assign(b.size(), std::vector<mpq_class>(b.size()));
  for (size_t s = 0; s < b.size(); ++s)
    for (size_t t = 0; t < b.size(); ++t) gram_[s][t] = value(g.pairing(b[s], b[t]));
}

mpq_class PointwiseOracle::value(const Scalar& s) const {
  Scalar v = s.substitute(params_);
  if (!v.is_rational()) throw std::invalid_argument("oracle: parameter left unbound");
  return v.to_rational();
}

mpq_class PointwiseOracle::root_value(const R& r, Model model, const std::vector<mpq_class>& x) const {
  mpq_class v = model == Model::Geometric ? mpq_class(1) : mpq_class(0);
  for (size_t t = 0; t < r.c.size(); ++t) {
    if (model == Model::Geometric)
      v *= power(x[t], r.c[t]);
    else
      v += r.c[t] * x[t];
  }
  return v;
}

std::vector<mpq_class> PointwiseOracle::random_point(Model model, std::mt19937& rng) const {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (;;) {
    std::vector<mpq_class> x(g_.dim());
    for (auto& v : x) {
      v = mpq_class(num(rng), den(rng));
      v.canonicalize();
    }
    bool ok = true;
    if (model == Model::Geometric)
      for (const auto& v : x) ok = ok && v != 0;
    for (const auto& r : pos_) {
      if (!ok) break;
      mpq_class u = root_value(r, model, x);
      ok = model == Model::Geometric ? u * u != 1 : u != 0;
    }
    if (ok) return x;
  }
}

mpq_class PointwiseOracle::main_identity_sum(Model model, const std::vector<mpq_class>& x) const {
  std::vector<mpq_class> F(pos_.size());
  for (size_t i = 0; i < pos_.size(); ++i) {
    mpq_class u = root_value(pos_[i], model, x);
    F[i] = model == Model::Geometric ? mpq_class((u * u + 1) / (u * u - 1)) : mpq_class(1 / u);
  }
  mpq_class c = model == Model::Geometric ? 1 : 0;
  mpq_class s = 0;
  for (size_t i = 0; i < pos_.size(); ++i)
    for (size_t j = 0; j < pos_.size(); ++j)
      if (i != j && !proportional(pos_[i].c, pos_[j].c))
        s += pos_[i].mult * pos_[j].mult * pair_[i][j] * (F[i] * F[j] - c);
  return s;
}

mpq_class PointwiseOracle::gauge_constant(Model model, const std::vector<mpq_class>& x) const {
  size_t d = gram_.size();
  std::vector<mpq_class> w(d, 0);
  std::vector<std::vector<mpq_class>> dw(d, std::vector<mpq_class>(d, 0));
  mpq_class V = 0;
  for (const auto& r : pos_) {
    mpq_class u = root_value(r, model, x);
    mpq_class F, S;  // coth-type function and 1/sinh^2-type function; D_s F = -c_s S
    if (model == Model::Geometric) {
      F = (u * u + 1) / (u * u - 1);
      S = 4 * u * u / ((u * u - 1) * (u * u - 1));
    } else {
      F = 1 / u;
      S = 1 / (u * u);
    }
    V += r.mult * (r.mult + 2 * r.mult2 + 1) * r.norm * S;
    for (size_t t = 0; t < d; ++t) {
      w[t] -= r.mult * r.c[t] * F;
      for (size_t s = 0; s < d; ++s) dw[s][t] += r.mult * r.c[s] * r.c[t] * S;
    }
  }
  mpq_class out = V;
  for (size_t s = 0; s < d; ++s)
    for (size_t t = 0; t < d; ++t) out -= gram_[s][t] * (dw[s][t] + w[s] * w[t]);
  return out;
}

mpq_class PointwiseOracle::rho_norm_squared() const {
  mpq_class s = 0;
  for (size_t i = 0; i < pos_.size(); ++i)
    for (size_t j = 0; j < pos_.size(); ++j) s += pos_[i].mult * pos_[j].mult * pair_[i][j];
  return s;
}

}  // namespace cms::oracle
