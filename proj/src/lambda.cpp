#include "cms/lambda.hpp"

#include <map>
#include <stdexcept>

#include "cms/linalg.hpp"

namespace cms {

VarNames super_names(int n, int m) {
  VarNames names = indexed_names("x", n);
  VarNames y = indexed_names("y", m);
  names.insert(names.end(), y.begin(), y.end());
  return names;
}

namespace {

Scalar k_param() { return Scalar::param(kParamK); }

Poly shift_vars(const Poly& p, int offset) {
  return map_monomials(p, [&](const Monomial& m) {
    Monomial r;
    for (int i = kMaxVars - 1 - offset; i >= 0; --i) r.set(i + offset, m[i]);
    return r;
  });
}

Poly swap_vars(const Poly& p, int a, int b) {
  return map_monomials(p, [&](const Monomial& m) {
    Monomial r = m;
    r.set(a, m[b]);
    r.set(b, m[a]);
    return r;
  });
}

Poly square_vars(const Poly& p) {
  return map_monomials(p, [](const Monomial& m) { return m.scaled(2); });
}

// (d/dx_1 - sign k d/dy_1) f restricted to y_1 = sign x_1.
Poly restriction_condition(const Poly& f, int n, int sign, const Scalar& k) {
  Poly h = f.partial(0) - f.partial(n) * (k * Scalar(sign));
  return substitute(h, n, Poly::variable(0) * Scalar(sign));
}

Poly maybe_pin(const Poly& p, const std::optional<Scalar>& k) {
  if (!k) return p;
  return substitute_params(p, {{kParamK, *k}});
}

// Block-symmetric basis of degree N: m_mu(x) m_nu(y).
std::vector<Poly> block_basis(int n, int m, int N) {
  std::vector<Poly> out;
  for (int a = 0; a <= N; ++a)
    for (const auto& mu : partitions_bounded(a, n, a))
      for (const auto& nu : partitions_bounded(N - a, m, N - a))
        out.push_back(monomial_symmetric(mu, n) * shift_vars(monomial_symmetric(nu, m), n));
  return out;
}

int nullity_of_conditions(const std::vector<Poly>& basis, int n, const std::vector<int>& signs, const Scalar& k) {
  std::map<Monomial, int> rows;
  std::vector<std::vector<std::pair<int, Scalar>>> cols;
  for (const auto& b : basis) {
    std::vector<std::pair<int, Scalar>> col;
    int block = 0;
    for (int sign : signs) {
      Poly c = restriction_condition(b, n, sign, k);
      for (const auto& [mono, coef] : c.terms()) {
        Monomial key = mono;
        key.set(kMaxVars - 1, block);  // keeps the conditions for each sign apart
        auto it = rows.find(key);
        if (it == rows.end()) it = rows.emplace(key, static_cast<int>(rows.size())).first;
        col.emplace_back(it->second, coef);
      }
      ++block;
    }
    cols.push_back(std::move(col));
  }
  Matrix a(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) a(i, static_cast<int>(j)) = c;
  return nullspace_dim(a);
}

}  // namespace

Poly newton_deformed(int n, int m, int r) {
  Poly p;
  for (int i = 0; i < n; ++i) p += Poly::variable(i, r);
  Scalar inv = k_param().inverse();
  for (int j = 0; j < m; ++j) p += Poly::variable(n + j, r) * inv;
  return p;
}

bool block_symmetric(const Poly& f, int n, int m) {
  for (int i = 0; i + 1 < n; ++i)
    if (swap_vars(f, i, i + 1) != f) return false;
  for (int j = 0; j + 1 < m; ++j)
    if (swap_vars(f, n + j, n + j + 1) != f) return false;
  return true;
}

bool lambda0_member(const Poly& f, int n, int m, std::string* witness) {
  if (!block_symmetric(f, n, m)) {
    if (witness) *witness = "not symmetric in the blocks";
    return false;
  }
  if (n == 0 || m == 0) return true;
  Poly c = restriction_condition(f, n, 1, k_param());
  if (!c.is_zero()) {
    if (witness) *witness = to_string(c, super_names(n, m));
    return false;
  }
  return true;
}

bool lambda0_member_bc(const Poly& f, int n, int m, std::string* witness) {
  if (!block_symmetric(f, n, m)) {
    if (witness) *witness = "not symmetric in the blocks";
    return false;
  }
  for (const auto& [mono, c] : f.terms())
    for (int i = 0; i < n + m; ++i)
      if (mono[i] % 2) {
        if (witness) *witness = "not even in every variable";
        return false;
      }
  if (n == 0 || m == 0) return true;
  for (int sign : {1, -1}) {
    Poly c = restriction_condition(f, n, sign, k_param());
    if (!c.is_zero()) {
      if (witness) *witness = to_string(c, super_names(n, m));
      return false;
    }
  }
  return true;
}

long hook_count(int n, int m, int N) { return static_cast<long>(fat_hook_partitions(n, m, N).size()); }

namespace {

using Series = std::vector<mpz_class>;

Series divide_by_one_minus_power(Series s, int i) {
  for (size_t d = i; d < s.size(); ++d) s[d] += s[d - i];
  return s;
}

}  // namespace

std::vector<mpz_class> poincare_closed_form(int n, int m, int nmax) {
  Series bracket(nmax + 1, 0);
  bracket[0] = 1;
  for (int i = 1; i <= m; ++i) {
    if (i * (n + 1) > nmax) break;
    Series term(nmax + 1, 0);
    term[i * (n + 1)] = 1;
    for (int j = 1; j <= i; ++j) term = divide_by_one_minus_power(term, j);
    for (int d = 0; d <= nmax; ++d) bracket[d] += term[d];
  }
  for (int i = 1; i <= n; ++i) bracket = divide_by_one_minus_power(bracket, i);
  return bracket;
}

std::vector<mpz_class> poincare_closed_form_bc(int n, int m, int nmax) {
  Series base = poincare_closed_form(n, m, nmax / 2);
  Series out(nmax + 1, 0);
  for (int d = 0; 2 * d <= nmax; ++d) out[2 * d] = base[d];
  return out;
}

std::vector<mpz_class> poincare_numerator_m1(int n) {
  int top = 2 * n + 6;
  Series s = poincare_closed_form(n, 1, top);
  for (int i = 1; i <= n + 1; ++i)
    for (int d = top; d >= i; --d) s[d] -= s[d - i];
  return s;
}

int component_dimension(int n, int m, int N, const std::optional<Scalar>& k_value) {
  std::vector<Poly> basis = block_basis(n, m, N);
  if (n == 0 || m == 0) return static_cast<int>(basis.size());
  Scalar k = k_value ? *k_value : k_param();
  return nullity_of_conditions(basis, n, {1}, k);
}

int component_dimension_bc(int n, int m, int N, const std::optional<Scalar>& k_value) {
  if (N % 2) return 0;
  std::vector<Poly> basis;
  for (const auto& b : block_basis(n, m, N / 2)) basis.push_back(square_vars(b));
  if (n == 0 || m == 0) return static_cast<int>(basis.size());
  Scalar k = k_value ? *k_value : k_param();
  return nullity_of_conditions(basis, n, {1, -1}, k);
}

int polynomial_rank(const std::vector<Poly>& polys) {
  std::map<Monomial, int> rows;
  for (const auto& p : polys)
    for (const auto& t : p.terms())
      if (!rows.count(t.first)) rows.emplace(t.first, static_cast<int>(rows.size()));
  Matrix a(static_cast<int>(rows.size()), static_cast<int>(polys.size()));
  for (size_t j = 0; j < polys.size(); ++j)
    for (const auto& [mono, c] : polys[j].terms()) a(rows[mono], static_cast<int>(j)) = c;
  return rank(a);
}

int newton_span_rank(int n, int m, int N, const std::optional<Scalar>& k_value) {
  std::vector<Poly> prods;
  for (const auto& mu : partitions(N)) {
    Poly p(Scalar(1));
    for (int r : mu.parts()) p *= newton_deformed(n, m, r);
    prods.push_back(maybe_pin(p, k_value));
  }
  return polynomial_rank(prods);
}

Poly deformed_image(const SymFun& f, int n, int m) {
  int top = 0;
  for (const auto& t : f.terms())
    for (int r = 0; r < kMaxVars; ++r)
      if (t.first[r]) top = std::max(top, r + 1);
  std::vector<Poly> images;
  for (int r = 1; r <= top; ++r) images.push_back(newton_deformed(n, m, r));
  Poly g = substitute_params(f, {{kParamTheta, -k_param()}});
  return compose(g, images);
}

Poly super_jack(const Partition& lambda, int n, int m) {
  return deformed_image(jack_polynomial(lambda), n, m);
}

Monomial expected_leading_monomial(const Partition& lambda, int n, int m) {
  Monomial mono;
  for (int i = 0; i < n; ++i) mono.set(i, lambda[i]);
  Partition conj = lambda.conjugate();
  for (int j = 0; j < m; ++j) mono.set(n + j, positive_part(conj[j] - n));
  return mono;
}

ZeroSetInstance power_sum_zero_instance(int n, int m, const Scalar& k) {
  ZeroSetInstance out;
  for (int r = 1; r <= n && !out.found; ++r)
    for (int s = 1; s <= m && !out.found; ++s)
      if (k * Scalar(r) == Scalar(-s)) {
        out.found = true;
        out.r = r;
        out.s = s;
      }
  if (!out.found) return out;
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) images.push_back(i < out.r ? Poly::variable(0) : Poly());
  for (int j = 0; j < m; ++j) images.push_back(j < out.s ? Poly::variable(0) : Poly());
  out.solves = true;
  for (int e = 1; e <= n + m; ++e) {
    Poly v = substitute_params(compose(newton_deformed(n, m, e), images), {{kParamK, k}});
    if (!v.is_zero()) {
      out.solves = false;
      out.residues.push_back("p" + std::to_string(e) + " = " + to_string(v, {"z"}));
    }
  }
  return out;
}

Scalar generic_elimination_coefficient() {
  Poly y = Poly::variable(0) * (-k_param());  // from x + y/k = 0
  Poly p2 = compose(newton_deformed(1, 1, 2), {Poly::variable(0), y});
  Monomial x2 = Monomial::unit(0, 2);
  if (p2 != Poly::term(x2, p2.coefficient(x2))) throw std::logic_error("unexpected elimination result");
  return p2.coefficient(x2);
}

}  // namespace cms
