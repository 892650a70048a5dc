#include "cms/hc.hpp"

#include <map>
#include <stdexcept>

#include "cms/linalg.hpp"
#include "cms/partition.hpp"

namespace cms {

VarNames lambda_names(int d) { return indexed_names("λ", d); }

Poly lambda_pairing(const GRS& g, const GVec& v) {
  Poly out;
  for (int i = 0; i < g.dim(); ++i) {
    GVec e(g.dim(), Scalar(0));
    e[i] = Scalar(1);
    Scalar c = g.pairing(e, v);
    if (!c.is_zero()) out += Poly::variable(i) * c;
  }
  return out;
}

HCFamily::HCFamily(std::shared_ptr<const GRS> g) : g_(std::move(g)) {
  orbit_ = g_->homogeneous_orbit();
  for (const auto& v : orbit_) {
    pair_v_.push_back(lambda_pairing(*g_, v));
    norm_.push_back(g_->pairing(v, v));
    std::vector<std::pair<Scalar, int>> links;
    for (int i : g_->positive_roots()) {
      const Root& a = g_->roots()[i];
      Scalar c = a.mult * g_->pairing(a.v, v) * Scalar::rational(1, 2);
      if (c.is_zero()) continue;
      GVec s = g_->reflect(a.v, v, Form::Euclidean);
      int j = -1;
      for (size_t t = 0; t < orbit_.size(); ++t)
        if (orbit_[t] == s) j = static_cast<int>(t);
      if (j < 0) throw std::logic_error("orbit not closed under reflection");
      links.emplace_back(c, j);
    }
    links_.push_back(std::move(links));
  }
  levels_.push_back(std::vector<Poly>(orbit_.size(), Poly(Scalar(1))));
}

const Poly& HCFamily::y(int v, int p) {
  std::lock_guard<std::mutex> lock(mutex_);
  while (static_cast<int>(levels_.size()) <= p) {
    const auto& prev = levels_.back();
    std::vector<Poly> next;
    for (size_t w = 0; w < orbit_.size(); ++w) {
      Poly y = pair_v_[w] * prev[w];
      for (const auto& [c, j] : links_[w]) y += prev[j] * c;
      next.push_back(std::move(y));
    }
    levels_.push_back(std::move(next));
  }
  return levels_[p][v];
}

Poly HCFamily::image(int p) {
  Poly z;
  for (size_t v = 0; v < orbit_.size(); ++v) z += y(static_cast<int>(v), p) * norm_[v].inverse();
  return z;
}

GVec hc_rho(const GRS& g) {
  GVec r = g.rho();
  for (auto& x : r) x *= Scalar::rational(1, 2);
  return r;
}

namespace {

// Leading degree and coefficient of a Laurent polynomial along zeta_t = s^{h_t}.
std::pair<long, Scalar> leading(const Poly& p, const std::vector<long>& h) {
  long best = 0;
  bool first = true;
  Scalar c;
  for (const auto& [m, coef] : p.terms()) {
    long d = 0;
    for (size_t t = 0; t < h.size(); ++t) d += h[t] * m[static_cast<int>(t)];
    if (first || d > best) {
      best = d;
      c = coef;
      first = false;
    } else if (d == best) {
      c += coef;
    }
  }
  return {best, c};
}

// Limit of a coefficient as e^{(a,x)} -> infinity for every positive root a.
Scalar chamber_limit(const RatFun& f, const std::vector<long>& h) {
  if (f.is_zero()) return Scalar(0);
  auto [dn, cn] = leading(f.num(), h);
  long dd = 0;
  Scalar cd(1);
  for (const auto& [i, e] : f.den()) {
    auto [d, c] = leading(f.basis()->poly(i), h);
    dd += d * e;
    cd *= c.pow(e);
  }
  if (cn.is_zero()) throw std::logic_error("cancellation in leading term");
  if (dn < dd) return Scalar(0);
  if (dn > dd) throw std::logic_error("coefficient unbounded in the positive chamber");
  return cn / cd;
}

}  // namespace

Poly operator_image(IntegralFamily& fam, int p, const GVec& shift) {
  const GRS& g = fam.system();
  if (fam.model() != Model::Geometric) throw std::invalid_argument("operator_image needs the geometric model");
  int d = g.dim();
  const auto& b = g.lattice_basis();
  // h with h . c_a > 0 for positive roots: a lexicographic weighting of the
  // ambient coordinates, pulled back to the lattice basis.
  std::vector<long> h(d, 0);
  for (int t = 0; t < d; ++t) {
    Scalar s(0);
    long w = 1;
    for (int i = d - 1; i >= 0; --i, w *= 64) s += b[t][i] * Scalar(static_cast<int>(w));
    if (!s.is_rational()) throw std::logic_error("lattice basis is not rational");
    mpq_class q = s.to_rational();
    if (q.get_den() != 1) throw std::logic_error("lattice basis is not integral");
    h[t] = q.get_num().get_si();
  }
  // D_t e^{(λ,x)} = c_t(λ) e^{(λ,x)} with sum_t (b_t, v) c_t = (λ, v).
  Matrix gram(d, d);
  for (int t = 0; t < d; ++t)
    for (int s = 0; s < d; ++s) gram(t, s) = g.pairing(b[t], b[s]);
  std::vector<Poly> shifted(d);
  for (int i = 0; i < d; ++i) shifted[i] = Poly::variable(i) + Poly(shift[i]);
  std::vector<Poly> c(d);
  for (int t = 0; t < d; ++t) {
    std::vector<Scalar> rhs(d, Scalar(0));
    rhs[t] = Scalar(1);
    auto col = solve(gram, rhs);
    if (!col) throw std::logic_error("degenerate form");
    for (int s = 0; s < d; ++s)
      if (!(*col)[s].is_zero()) c[t] += compose(lambda_pairing(g, b[s]), shifted) * (*col)[s];
  }
  Poly out;
  for (const auto& [idx, coef] : fam.integral(p).terms()) {
    Scalar lim = chamber_limit(coef, h);
    if (lim.is_zero()) continue;
    Poly term(lim);
    for (int t = 0; t < d; ++t)
      if (idx[t]) term *= c[t].pow(idx[t]);
    out += term;
  }
  return out;
}

Poly restrict_to_hyperplane(const GRS& g, const Poly& P, const GVec& gamma) {
  Poly form = lambda_pairing(g, gamma);
  int j = -1;
  Scalar cj;
  for (int i = 0; i < g.dim() && j < 0; ++i) {
    Scalar c = form.coefficient(Monomial::unit(i));
    if (!c.is_zero()) {
      j = i;
      cj = c;
    }
  }
  if (j < 0) throw std::invalid_argument("isotropic direction has zero pairing form");
  Poly value = (Poly::variable(j) * cj - form) * cj.inverse();
  return substitute(P, j, value);
}

namespace {

Poly shifted_by(const GRS& g, const Poly& P, const GVec& v, const Scalar& t) {
  std::vector<Poly> images;
  for (int i = 0; i < g.dim(); ++i) images.push_back(Poly::variable(i) + Poly(v[i] * t));
  return compose(P, images);
}

}  // namespace

bool quasi_invariant(const GRS& g, const Poly& P, std::string* witness) {
  VarNames names = lambda_names(g.dim());
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    if (!a.imaginary) continue;
    Poly diff = shifted_by(g, P, a.v, Scalar::rational(1, 2)) - shifted_by(g, P, a.v, Scalar::rational(-1, 2));
    Poly r = restrict_to_hyperplane(g, diff, a.v);
    if (!r.is_zero()) {
      if (witness) *witness = "root " + to_string(a.v) + ": " + to_string(r, names);
      return false;
    }
  }
  return true;
}

bool quasi_invariant_rational(const GRS& g, const Poly& P, std::string* witness) {
  VarNames names = lambda_names(g.dim());
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    if (!a.imaginary) continue;
    Poly d;
    for (int t = 0; t < g.dim(); ++t)
      if (!a.v[t].is_zero()) d += P.partial(t) * a.v[t];
    Poly r = restrict_to_hyperplane(g, d, a.v);
    if (!r.is_zero()) {
      if (witness) *witness = "root " + to_string(a.v) + ": " + to_string(r, names);
      return false;
    }
  }
  return true;
}

bool w0_invariant(const GRS& g, const Poly& P, std::string* witness) {
  VarNames names = lambda_names(g.dim());
  for (int i : g.positive_roots()) {
    const Root& a = g.roots()[i];
    if (a.imaginary) continue;
    Poly form = lambda_pairing(g, a.v);
    Scalar scale = Scalar(2) / g.pairing(a.v, a.v);
    std::vector<Poly> images;
    for (int t = 0; t < g.dim(); ++t) images.push_back(Poly::variable(t) - form * (a.v[t] * scale));
    Poly diff = compose(P, images) - P;
    if (!diff.is_zero()) {
      if (witness) *witness = "reflection in " + to_string(a.v) + ": " + to_string(diff, names);
      return false;
    }
  }
  return true;
}

Poly power_sum_top(const GRS& g, int r) {
  const Matrix& b = g.form(Form::Deformed);
  Poly out;
  for (int i = 0; i < g.dim(); ++i) out += Poly::variable(i, r) * b(i, i).pow(r - 1);
  return out;
}

Poly bernoulli_polynomial(int r) {
  std::vector<mpq_class> bn{1};
  std::vector<std::vector<mpz_class>> binom{{1}};
  for (int n = 1; n <= r + 1; ++n) {
    std::vector<mpz_class> row(n + 1, 1);
    for (int j = 1; j < n; ++j) row[j] = binom[n - 1][j - 1] + binom[n - 1][j];
    binom.push_back(row);
  }
  for (int n = 1; n <= r; ++n) {
    mpq_class s = 0;
    for (int j = 0; j < n; ++j) s += mpq_class(binom[n + 1][j]) * bn[j];
    bn.push_back(-s / (n + 1));
  }
  Poly out;
  for (int j = 0; j <= r; ++j) {
    mpq_class c = mpq_class(binom[r][j]) * bn[j];
    if (c != 0) out += Poly::variable(0, r - j) * Scalar(c);
  }
  return out;
}

Poly bernoulli_generator(const GRS& g, int r) {
  if (g.family() != Family::A) throw std::invalid_argument("Bernoulli generators are defined for A systems");
  Poly br = bernoulli_polynomial(r);
  const Matrix& b = g.form(Form::Deformed);
  Poly out;
  for (int i = 0; i < g.dim(); ++i)
    out += compose(br, {Poly::variable(i) + Poly(Scalar::rational(1, 2))}) * b(i, i).pow(r - 1);
  return out;
}

std::optional<std::vector<Scalar>> express_in_generators(const Poly& target, const std::vector<Poly>& gens,
                                                         int max_weight) {
  std::vector<Poly> columns;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& mu : partitions_bounded(w, w, static_cast<int>(gens.size()))) {
      Poly prod(Scalar(1));
      for (int part : mu.parts()) prod *= gens[part - 1];
      columns.push_back(std::move(prod));
    }
  std::map<Monomial, int> rows;
  auto row_of = [&](const Monomial& m) {
    auto it = rows.find(m);
    if (it == rows.end()) it = rows.emplace(m, static_cast<int>(rows.size())).first;
    return it->second;
  };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) row_of(t.first);
  for (const auto& t : target.terms()) row_of(t.first);
  Matrix a(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [m, c] : columns[j].terms()) a(rows[m], static_cast<int>(j)) = c;
  std::vector<Scalar> rhs(rows.size(), Scalar(0));
  for (const auto& [m, c] : target.terms()) rhs[rows[m]] = c;
  return solve(a, rhs);
}

}  // namespace cms
