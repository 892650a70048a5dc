#include "cms/diffop.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

#include "cms/parallel.hpp"

namespace cms {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All K with 0 <= K <= I componentwise.
void for_each_submultiindex(const Monomial& index, const std::function<void(const Monomial&)>& fn) {
  int span = index.span();
  Monomial k;
  std::function<void(int)> rec = [&](int t) {
    if (t == span) {
      fn(k);
      return;
    }
    for (int e = 0; e <= index[t]; ++e) {
      k.set(t, e);
      rec(t + 1);
    }
    k.set(t, 0);
  };
  rec(0);
}

Scalar multi_binomial(const Monomial& i, const Monomial& k) {
  long r = 1;
  for (int t = 0; t < kMaxVars; ++t)
    if (k[t]) r *= binomial(i[t], k[t]);
  return Scalar(static_cast<int>(r));
}

// Memoized derivatives D^K f.
class DerivativeCache {
 public:
  explicit DerivativeCache(const RatFun& f) { cache_.emplace(Monomial{}, f); }
  const RatFun& get(const Monomial& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    int t = 0;
    while (k[t] == 0) ++t;
    RatFun d = get(k / Monomial::unit(t)).derive(t);
    return cache_.emplace(k, std::move(d)).first->second;
  }

 private:
  std::map<Monomial, RatFun> cache_;
};

using Accumulator = std::map<Monomial, RatSum>;

void accumulate(Accumulator& acc, const FactorBasis* basis, const Monomial& index, const RatFun& f,
                const Scalar& scale) {
  auto it = acc.find(index);
  if (it == acc.end()) it = acc.emplace(index, RatSum(basis)).first;
  it->second.add(f, scale);
}

// Adds sign * sum_{I,J,K} C(I,K) a_I (D^K b_J) D^{I-K+J}, skipping K = 0 if asked.
void leibniz(const EulerOp& a, const EulerOp& b, bool skip_zero, const Scalar& sign, Accumulator& out,
             std::mutex& out_mutex) {
  const FactorBasis* basis = a.basis() ? a.basis() : b.basis();
  std::vector<const std::pair<const Monomial, RatFun>*> bterms;
  for (const auto& t : b.terms()) bterms.push_back(&t);
  parallel_for(static_cast<int>(bterms.size()), [&](int j) {
    const auto& [jidx, bj] = *bterms[j];
    DerivativeCache cache(bj);
    Accumulator local;
    for (const auto& [iidx, ai] : a.terms()) {
      for_each_submultiindex(iidx, [&](const Monomial& k) {
        if (skip_zero && k.is_one()) return;
        const RatFun& db = cache.get(k);
        if (db.is_zero()) return;
        accumulate(local, basis, (iidx / k) * jidx, ai.mul_raw(db), multi_binomial(iidx, k) * sign);
      });
    }
    std::lock_guard<std::mutex> lock(out_mutex);
    for (auto& [idx, sum] : local) {
      auto it = out.find(idx);
      if (it == out.end()) out.emplace(idx, std::move(sum));
      else it->second.merge(sum);
    }
  });
}

EulerOp finish(const FactorBasis* basis, Accumulator& acc) {
  std::vector<std::pair<const Monomial, RatSum>*> items;
  for (auto& t : acc) items.push_back(&t);
  std::vector<RatFun> results(items.size());
  parallel_for(static_cast<int>(items.size()), [&](int i) { results[i] = items[i]->second.result(); });
  EulerOp op(basis);
  for (size_t i = 0; i < items.size(); ++i) op.add_term(items[i]->first, results[i]);
  return op;
}

}  // namespace

EulerOp EulerOp::identity(const FactorBasis* basis) {
  EulerOp op(basis);
  op.terms_.emplace(Monomial{}, RatFun(basis, Scalar(1)));
  return op;
}

EulerOp EulerOp::multiplication(const RatFun& f) {
  EulerOp op(f.basis());
  op.add_term(Monomial{}, f);
  return op;
}

EulerOp EulerOp::derivation(const FactorBasis* basis, int t) {
  EulerOp op(basis);
  op.terms_.emplace(Monomial::unit(t), RatFun(basis, Scalar(1)));
  return op;
}

int EulerOp::order() const {
  int o = 0;
  for (const auto& [i, c] : terms_) o = std::max(o, i.total_degree());
  return o;
}

RatFun EulerOp::coefficient(const Monomial& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? RatFun(basis_) : it->second;
}

void EulerOp::add_term(const Monomial& index, const RatFun& c) {
  if (c.is_zero()) return;
  if (!basis_) basis_ = c.basis();
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

EulerOp EulerOp::operator+(const EulerOp& o) const {
  EulerOp r = *this;
  if (!r.basis_) r.basis_ = o.basis_;
  for (const auto& [i, c] : o.terms_) r.add_term(i, c);
  return r;
}

EulerOp EulerOp::operator-() const {
  EulerOp r(basis_);
  for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
  return r;
}

EulerOp EulerOp::operator-(const EulerOp& o) const { return *this + (-o); }

EulerOp EulerOp::operator*(const Scalar& s) const {
  EulerOp r(basis_);
  if (s.is_zero()) return r;
  for (const auto& [i, c] : terms_) r.terms_.emplace(i, c * s);
  return r;
}

EulerOp EulerOp::left_multiply(const RatFun& f) const {
  EulerOp r(basis_ ? basis_ : f.basis());
  for (const auto& [i, c] : terms_) r.add_term(i, f * c);
  return r;
}

EulerOp EulerOp::compose(const EulerOp& o) const {
  const FactorBasis* basis = basis_ ? basis_ : o.basis_;
  Accumulator acc;
  std::mutex mu;
  leibniz(*this, o, false, Scalar(1), acc, mu);
  return finish(basis, acc);
}

EulerOp EulerOp::commutator(const EulerOp& o) const {
  // The K = 0 parts of AB and BA cancel; only derivative terms remain.
  const FactorBasis* basis = basis_ ? basis_ : o.basis_;
  Accumulator acc;
  std::mutex mu;
  leibniz(*this, o, true, Scalar(1), acc, mu);
  leibniz(o, *this, true, Scalar(-1), acc, mu);
  return finish(basis, acc);
}

RatFun EulerOp::apply(const RatFun& f) const {
  DerivativeCache cache(f);
  RatSum sum(basis_ ? basis_ : f.basis());
  for (const auto& [i, c] : terms_) sum.add(c.mul_raw(cache.get(i)));
  return sum.result();
}

EulerOp EulerOp::doubled() const {
  EulerOp r(basis_);
  for (const auto& [i, c] : terms_) r.add_term(i, c.doubled() * Scalar(2).pow(-i.total_degree()));
  return r;
}

EulerOp EulerOp::substitute_params(const std::map<int, Scalar>& values) const {
  EulerOp r(basis_);
  for (const auto& [i, c] : terms_) r.add_term(i, c.substitute_params(values));
  return r;
}

std::string EulerOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  int nv = basis_ ? basis_->nvars() : kMaxVars;
  for (const auto& [i, c] : terms_) {
    out += "D[";
    for (int t = 0; t < nv; ++t) {
      if (t) out += ",";
      out += std::to_string(i[t]);
    }
    out += "]: " + c.str() + "\n";
  }
  return out;
}

RatFun half_f(const FactorBasis* basis, const std::vector<int>& c) {
  if (basis->model() == Model::Affine) return RatFun::inverse_linear(basis, c, 1);
  Monomial m;
  for (size_t t = 0; t < c.size(); ++t) m.set(static_cast<int>(t), c[t]);
  Poly num = Poly::term(m, Scalar::rational(1, 2)) + Poly(Scalar::rational(1, 2));
  return RatFun(basis, num) * RatFun::inverse_binomial(basis, c, 1, 1);
}

RatFun half_phi(const FactorBasis* basis, const std::vector<int>& c) {
  if (basis->model() == Model::Affine) return -RatFun::inverse_linear(basis, c, 2);
  Monomial m;
  for (size_t t = 0; t < c.size(); ++t) m.set(static_cast<int>(t), c[t]);
  return RatFun(basis, Poly::term(m, Scalar(-1))) * RatFun::inverse_binomial(basis, c, 1, 2);
}

RatFun full_coth(const FactorBasis* basis, const std::vector<int>& c) {
  if (basis->model() == Model::Affine) return RatFun::inverse_linear(basis, c, 1);
  std::vector<int> c2 = c;
  Monomial m;
  for (size_t t = 0; t < c.size(); ++t) {
    c2[t] *= 2;
    m.set(static_cast<int>(t), c2[t]);
  }
  return RatFun(basis, Poly::term(m, Scalar(1)) + Poly(Scalar(1))) * RatFun::inverse_binomial(basis, c2, 1, 1);
}

RatFun full_inv_sinh2(const FactorBasis* basis, const std::vector<int>& c) {
  if (basis->model() == Model::Affine) return RatFun::inverse_linear(basis, c, 2);
  std::vector<int> c2 = c;
  Monomial m;
  for (size_t t = 0; t < c.size(); ++t) {
    c2[t] *= 2;
    m.set(static_cast<int>(t), c2[t]);
  }
  return RatFun(basis, Poly::term(m, Scalar(4))) * RatFun::inverse_binomial(basis, c2, 1, 2);
}

EulerOp directional(const GRS& g, const GVec& v, Model model) {
  const FactorBasis* basis = g.factor_basis(model);
  EulerOp op(basis);
  const auto& b = g.lattice_basis();
  for (int t = 0; t < g.dim(); ++t) {
    Scalar c = g.pairing(b[t], v);
    if (!c.is_zero()) op.add_term(Monomial::unit(t), RatFun(basis, c));
  }
  return op;
}

EulerOp laplacian(const GRS& g, Model model) {
  const FactorBasis* basis = g.factor_basis(model);
  EulerOp op(basis);
  const auto& b = g.lattice_basis();
  for (int t = 0; t < g.dim(); ++t)
    for (int s = 0; s < g.dim(); ++s) {
      Scalar c = g.pairing(b[t], b[s]);
      if (!c.is_zero()) op.add_term(Monomial::unit(t) * Monomial::unit(s), RatFun(basis, c));
    }
  return op;
}

namespace {

GVec doubled_vec(const GVec& v) {
  GVec r = v;
  for (auto& x : r) x *= Scalar(2);
  return r;
}

}  // namespace

EulerOp build_schrodinger(const GRS& g, Model model, Normalization norm) {
  const FactorBasis* basis = g.factor_basis(model);
  EulerOp op = -laplacian(g, model);
  RatSum potential(basis);
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    Scalar m2 = g.multiplicity(doubled_vec(a.v));
    Scalar coupling = a.mult * (a.mult + Scalar(2) * m2 + Scalar(1)) * g.pairing(a.v, a.v);
    RatFun pot = (model == Model::Geometric && norm == Normalization::Half)
                     ? -half_phi(basis, a.lattice)
                     : full_inv_sinh2(basis, a.lattice);
    potential.add(pot, coupling);
  }
  op.add_term(Monomial{}, potential.result());
  return op;
}

EulerOp build_radial(const GRS& g, Model model, Normalization norm) {
  const FactorBasis* basis = g.factor_basis(model);
  EulerOp op = -laplacian(g, model);
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    RatFun drift = (model == Model::Geometric && norm == Normalization::Half) ? half_f(basis, a.lattice)
                                                                               : full_coth(basis, a.lattice);
    op += directional(g, a.v, model).left_multiply(drift * (Scalar(2) * a.mult));
  }
  return op;
}

namespace {

std::vector<RatSum> log_derivative_terms(const GRS& g, Model model, Normalization norm) {
  const FactorBasis* basis = g.factor_basis(model);
  std::vector<RatSum> sums(g.dim(), RatSum(basis));
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    RatFun f = (model == Model::Geometric && norm == Normalization::Half) ? half_f(basis, a.lattice)
                                                                           : full_coth(basis, a.lattice);
    for (int t = 0; t < g.dim(); ++t)
      if (a.lattice[t] != 0) sums[t].add(f, -(a.mult * Scalar(a.lattice[t])));
  }
  return sums;
}

}  // namespace

std::vector<RatFun> log_derivative_psi0(const GRS& g, Model model, Normalization norm) {
  std::vector<RatFun> w;
  for (auto& s : log_derivative_terms(g, model, norm)) w.push_back(s.result());
  return w;
}

EulerOp conjugate_by_psi0(const GRS& g, const EulerOp& a, Model model, Normalization norm) {
  // psi0^-1 D_t psi0 = D_t + w_t; powers are expanded with unreduced
  // coefficients, one term per product of root factors.
  using LazyOp = std::map<Monomial, RatSum>;
  const FactorBasis* basis = g.factor_basis(model);
  std::vector<RatSum> w = log_derivative_terms(g, model, norm);
  std::map<Monomial, LazyOp> powers;
  RatSum one(basis);
  one.add(RatFun(basis, Scalar(1)));
  powers[Monomial{}].emplace(Monomial{}, one);
  std::function<const LazyOp&(const Monomial&)> power = [&](const Monomial& i) -> const LazyOp& {
    auto it = powers.find(i);
    if (it != powers.end()) return it->second;
    int t = 0;
    while (i[t] == 0) ++t;
    LazyOp p;
    for (const auto& [j, s] : power(i / Monomial::unit(t))) {
      p.try_emplace(j * Monomial::unit(t), basis).first->second.merge(s);
      RatSum& here = p.try_emplace(j, basis).first->second;
      here.merge(s.derive(t));
      here.add_product(w[t], s);
    }
    return powers.emplace(i, std::move(p)).first->second;
  };
  std::map<Monomial, RatSum> sums;
  for (const auto& [i, c] : a.terms())
    for (const auto& [j, d] : power(i)) sums.try_emplace(j, basis).first->second.add_product(c, d);
  EulerOp out(basis);
  for (const auto& [j, s] : sums) out.add_term(j, s.result());
  return out;
}

Scalar rho_norm_squared(const GRS& g) {
  GVec r = g.rho();
  return g.pairing(r, r);
}

}  // namespace cms
