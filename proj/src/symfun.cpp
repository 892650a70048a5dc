#include "cms/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cms/linalg.hpp"

namespace cms {

VarNames power_sum_names(int n) { return indexed_names("p", n); }

Monomial power_sum_monomial(const Partition& mu) {
  Monomial m;
  for (int part : mu.parts()) m.set(part - 1, m[part - 1] + 1);
  return m;
}

Partition monomial_partition(const Monomial& m) {
  std::vector<int> parts;
  for (int r = 0; r < kMaxVars; ++r)
    for (int e = 0; e < m[r]; ++e) parts.push_back(r + 1);
  return Partition(parts);
}

Poly monomial_symmetric(const Partition& mu, int nvars) {
  if (mu.length() > nvars) return Poly();
  std::vector<int> e(nvars, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu[i];
  std::sort(e.begin(), e.end());
  std::vector<Poly::Term> ts;
  do {
    Monomial m;
    for (int i = 0; i < nvars; ++i) m.set(i, e[i]);
    ts.emplace_back(m, Scalar(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return Poly::from_terms(std::move(ts));
}

Poly power_sum(int r, int nvars) {
  Poly p;
  for (int i = 0; i < nvars; ++i) p += Poly::variable(i, r);
  return p;
}

std::map<Partition, Scalar> monomial_expansion(const Poly& f) {
  std::map<Partition, Scalar> out;
  for (const auto& [m, c] : f.terms()) {
    bool decreasing = true;
    for (int i = 0; i + 1 < kMaxVars && decreasing; ++i)
      if (m[i] < m[i + 1]) decreasing = false;
    if (!decreasing) continue;
    std::vector<int> parts;
    for (int i = 0; i < kMaxVars; ++i) parts.push_back(m[i]);
    out.emplace(Partition(parts), c);
  }
  return out;
}

namespace {

// Columns: monomial expansions of p_nu in `degree` variables.
const std::pair<std::vector<Partition>, Matrix>& power_to_monomial(int degree) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<Partition>, Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<Partition> parts = partitions(degree);
  int n = static_cast<int>(parts.size());
  Matrix l(n, n);
  for (int j = 0; j < n; ++j) {
    Poly p(Scalar(1));
    for (int r : parts[j].parts()) p *= power_sum(r, degree);
    auto e = monomial_expansion(p);
    for (int i = 0; i < n; ++i) {
      auto at = e.find(parts[i]);
      if (at != e.end()) l(i, j) = at->second;
    }
  }
  return cache.emplace(degree, std::make_pair(parts, l)).first->second;
}

// Exact quotient g / (x_i - x_j); throws if the division leaves a remainder.
Poly divide_difference(const Poly& g, int i, int j) {
  std::map<int, Poly> by_power;
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m;
    rest.set(i, 0);
    by_power[m[i]] += Poly::term(rest, c);
  }
  if (by_power.empty()) return Poly();
  int top = by_power.rbegin()->first;
  Poly xj = Poly::variable(j);
  Poly q, quotient;
  for (int e = top; e >= 1; --e) {
    auto it = by_power.find(e);
    q = (it == by_power.end() ? Poly() : it->second) + xj * q;
    quotient += q.mul_term(Monomial::unit(i, e - 1), Scalar(1));
  }
  auto it0 = by_power.find(0);
  Poly rem = (it0 == by_power.end() ? Poly() : it0->second) + xj * q;
  if (!rem.is_zero()) throw std::logic_error("inexact division by x_i - x_j");
  return quotient;
}

Poly apply_jack_operator(const Poly& f, int nvars, const Scalar& alpha) {
  Poly out;
  Scalar half_alpha = alpha * Scalar::rational(1, 2);
  for (const auto& [m, c] : f.terms()) {
    long s = 0;
    for (int i = 0; i < nvars; ++i) s += static_cast<long>(m[i]) * (m[i] - 1);
    if (s) out += Poly::term(m, c * half_alpha * Scalar(static_cast<int>(s)));
  }
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j) {
      Poly g = Poly::variable(i, 2) * f.partial(i) - Poly::variable(j, 2) * f.partial(j);
      out += divide_difference(g, i, j);
    }
  return out;
}

}  // namespace

SymFun monomial_to_power_sums(const std::map<Partition, Scalar>& coeffs, int degree) {
  const auto& [parts, l] = power_to_monomial(degree);
  std::vector<Scalar> rhs(parts.size(), Scalar(0));
  for (size_t i = 0; i < parts.size(); ++i) {
    auto it = coeffs.find(parts[i]);
    if (it != coeffs.end()) rhs[i] = it->second;
  }
  for (const auto& [mu, c] : coeffs)
    if (mu.weight() != degree && !c.is_zero()) throw std::invalid_argument("mixed degrees");
  auto sol = solve(l, rhs);
  if (!sol) throw std::logic_error("power sums do not span");
  SymFun out;
  for (size_t j = 0; j < parts.size(); ++j)
    if (!(*sol)[j].is_zero()) out += Poly::term(power_sum_monomial(parts[j]), (*sol)[j]);
  return out;
}

std::map<Partition, Scalar> jack_monomial(const Partition& lambda, const Scalar& alpha) {
  int n = lambda.weight();
  std::vector<Partition> order = partitions(n);  // decreasing lexicographic
  size_t start = std::find(order.begin(), order.end(), lambda) - order.begin();
  std::vector<Partition> cand(order.begin() + static_cast<long>(start), order.end());
  std::vector<std::map<Partition, Scalar>> dm;
  for (const auto& nu : cand) {
    auto e = monomial_expansion(apply_jack_operator(monomial_symmetric(nu, n), n, alpha));
    for (const auto& [mu, c] : e)
      if (!c.is_zero() && mu < nu) throw std::logic_error("operator is not triangular");
    dm.push_back(std::move(e));
  }
  auto entry = [&](size_t col, const Partition& row) {
    auto it = dm[col].find(row);
    return it == dm[col].end() ? Scalar(0) : it->second;
  };
  Scalar eigen = entry(0, lambda);
  std::vector<Scalar> c(cand.size(), Scalar(0));
  c[0] = Scalar(1);
  for (size_t i = 1; i < cand.size(); ++i) {
    Scalar s(0);
    for (size_t j = 0; j < i; ++j)
      if (!c[j].is_zero()) s += entry(j, cand[i]) * c[j];
    if (s.is_zero()) continue;
    Scalar gap = eigen - entry(i, cand[i]);
    if (gap.is_zero()) throw std::domain_error("degenerate Jack parameter");
    c[i] = s / gap;
    if (!cand[i].dominated_by(lambda)) throw std::logic_error("Jack expansion leaves the dominance cone");
  }
  std::map<Partition, Scalar> out;
  for (size_t i = 0; i < cand.size(); ++i)
    if (!c[i].is_zero()) out.emplace(cand[i], c[i]);
  return out;
}

SymFun jack_polynomial(const Partition& lambda) {
  Scalar alpha = Scalar::param(kParamTheta).inverse();
  return monomial_to_power_sums(jack_monomial(lambda, alpha), lambda.weight());
}

}  // namespace cms
