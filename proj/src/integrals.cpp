#include "cms/integrals.hpp"

#include <stdexcept>

#include "cms/linalg.hpp"
#include "cms/parallel.hpp"

namespace cms {

namespace {

bool proportional(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

RatFun main_identity_sum(const GRS& g, Model model) {
  const FactorBasis* basis = g.factor_basis(model);
  std::vector<int> pos = g.positive_roots();
  std::vector<RatFun> f;
  for (int i : pos) f.push_back(full_coth(basis, g.roots()[i].lattice));
  RatSum sum(basis);
  Scalar constant(0);
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = 0; j < pos.size(); ++j) {
      if (i == j) continue;
      const Root& a = g.roots()[pos[i]];
      const Root& b = g.roots()[pos[j]];
      if (proportional(a.lattice, b.lattice)) continue;
      Scalar w = a.mult * b.mult * g.pairing(a.v, b.v);
      if (w.is_zero()) continue;
      sum.add(f[i].mul_raw(f[j]), w);
      if (model == Model::Geometric) constant -= w;
    }
  sum.add(RatFun(basis, constant));
  return sum.result();
}

IdentityResult main_identity(const GRS& g, Model model) {
  RatFun r = main_identity_sum(g, model);
  IdentityResult out;
  out.holds = r.is_zero();
  if (!out.holds) out.residue = r.str();
  return out;
}

IntegralFamily::IntegralFamily(std::shared_ptr<const GRS> g, Model model)
    : g_(std::move(g)), model_(model), basis_(g_->factor_basis(model)) {
  orbit_ = g_->homogeneous_orbit();
  for (const auto& v : orbit_) {
    orbit_norm_.push_back(g_->pairing(v, v));
    orbit_euclid_.push_back(g_->pairing(v, v, Form::Euclidean));
    d_.push_back(directional(*g_, v, model_));
  }
  for (int i : g_->positive_roots()) {
    const Root& a = g_->roots()[i];
    PositiveRoot r;
    r.mult = a.mult;
    r.v = a.v;
    r.euclid_norm = g_->pairing(a.v, a.v, Form::Euclidean);
    r.f = half_f(basis_, a.lattice);
    r.phi = half_phi(basis_, a.lattice);
    for (const auto& v : orbit_) {
      r.pair_v.push_back(g_->pairing(a.v, v));
      int j = orbit_index(g_->reflect(a.v, v, Form::Euclidean));
      if (j < 0) throw std::logic_error("orbit not closed under reflection");
      r.reflect.push_back(j);
    }
    roots_.push_back(std::move(r));
  }
}

int IntegralFamily::orbit_index(const GVec& v) const {
  for (size_t i = 0; i < orbit_.size(); ++i)
    if (orbit_[i] == v) return static_cast<int>(i);
  return -1;
}

void IntegralFamily::fill(int p) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  while (static_cast<int>(levels_.size()) < p) {
    int level = static_cast<int>(levels_.size()) + 1;
    std::vector<EulerOp> next(orbit_.size());
    if (level == 1) {
      next = d_;
    } else {
      const auto& prev = levels_.back();
      parallel_for(static_cast<int>(orbit_.size()), [&](int v) {
        std::map<Monomial, RatSum> acc;
        auto add = [&](const Monomial& idx, const RatFun& f, const Scalar& s) {
          auto it = acc.find(idx);
          if (it == acc.end()) it = acc.emplace(idx, RatSum(basis_)).first;
          it->second.add(f, s);
        };
        for (const auto& [t1, c] : d_[v].terms()) {
          int t = 0;
          while (t1[t] == 0) ++t;
          Scalar ct = c.constant_value();
          for (const auto& [idx, a] : prev[v].terms()) {
            add(idx * t1, a, ct);
            RatFun da = a.derive(t);
            if (!da.is_zero()) add(idx, da, ct);
          }
        }
        for (const auto& r : roots_) {
          Scalar w = -(r.mult * r.pair_v[v]);
          int s = r.reflect[v];
          if (w.is_zero() || s == v) continue;
          for (const auto& [idx, a] : prev[v].terms()) add(idx, r.f.mul_raw(a), w);
          for (const auto& [idx, a] : prev[s].terms()) add(idx, r.f.mul_raw(a), -w);
        }
        EulerOp op(basis_);
        for (auto& [idx, sum] : acc) op.add_term(idx, sum.result());
        next[v] = std::move(op);
      });
    }
    levels_.push_back(std::move(next));
  }
}

const EulerOp& IntegralFamily::nabla(int v, int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  fill(p);
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return levels_[p - 1][v];
}

const EulerOp& IntegralFamily::integral(int p) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = integrals_.find(p);
  if (it != integrals_.end()) return it->second;
  fill(p);
  std::map<Monomial, RatSum> acc;
  for (size_t v = 0; v < orbit_.size(); ++v) {
    Scalar w = orbit_norm_[v].inverse();
    for (const auto& [idx, a] : levels_[p - 1][v].terms()) {
      auto at = acc.find(idx);
      if (at == acc.end()) at = acc.emplace(idx, RatSum(basis_)).first;
      at->second.add(a, w);
    }
  }
  EulerOp op(basis_);
  for (auto& [idx, sum] : acc) op.add_term(idx, sum.result());
  return integrals_.emplace(p, std::move(op)).first->second;
}

EulerOp IntegralFamily::commutator_relation_defect(int v, int p) {
  // Laplacian - 2 sum m_a f_a d_a; equals L_2 for A and L_2 / 2 for BC.
  EulerOp l2 = -build_radial(*g_, model_, Normalization::Half);
  const EulerOp& dv = nabla(v, p);
  EulerOp lhs = l2.commutator(dv);
  EulerOp rhs(basis_);
  for (const auto& r : roots_) {
    int s = r.reflect[v];
    if (s == v) continue;
    Scalar w = orbit_norm_[v] * r.mult * r.euclid_norm / orbit_euclid_[v];
    rhs += (dv - nabla(s, p)).left_multiply(r.phi * w);
  }
  return lhs - rhs;
}

EulerOp IntegralFamily::commutator(int p, int q) { return integral(p).commutator(integral(q)); }

Poly IntegralFamily::top_symbol(int p) {
  const EulerOp& l = integral(p);
  int order = l.order();
  Poly s;
  for (const auto& [idx, c] : l.terms()) {
    if (idx.total_degree() != order) continue;
    if (!c.is_constant()) throw std::logic_error("top-order coefficient is not constant");
    s += Poly::term(idx, c.constant_value());
  }
  return s;
}

int IntegralFamily::independent_symbols(const std::vector<int>& ps) {
  int d = g_->dim();
  std::vector<Scalar> point;
  for (int t = 0; t < d; ++t) point.push_back(Scalar(t * t + 2 * t + 3));
  Matrix jac(static_cast<int>(ps.size()), d);
  for (size_t i = 0; i < ps.size(); ++i) {
    Poly s = top_symbol(ps[i]);
    for (int t = 0; t < d; ++t) jac(static_cast<int>(i), t) = evaluate(s.partial(t), point);
  }
  return rank(jac);
}

}  // namespace cms
