#include "cms/poly.hpp"

#include <stdexcept>

namespace cms {

Scalar evaluate(const Poly& p, const std::vector<Scalar>& point) {
  Scalar s;
  for (const auto& [m, c] : p.terms()) {
    Scalar v = c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (m[i] == 0) continue;
      if (i >= static_cast<int>(point.size())) throw std::out_of_range("evaluate: point too short");
      v *= point[i].pow(m[i]);
    }
    s += v;
  }
  return s;
}

Poly substitute(const Poly& p, int var, const Poly& value) {
  int d = p.degree_in(var);
  if (p.min_degree_in(var) < 0) throw std::domain_error("substitute: negative exponent in substituted variable");
  std::vector<Poly> powers{Poly(Scalar(1))};
  for (int i = 1; i <= d; ++i) powers.push_back(powers.back() * value);
  std::vector<std::vector<Poly::Term>> parts(d + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(var, 0);
    parts[m[var]].emplace_back(rest, c);
  }
  Poly out;
  for (int i = 0; i <= d; ++i)
    if (!parts[i].empty()) out += Poly::from_terms(std::move(parts[i])) * powers[i];
  return out;
}

Poly substitute_params(const Poly& p, const std::map<int, Scalar>& values) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) ts.emplace_back(m, c.substitute(values));
  return Poly::from_terms(std::move(ts));
}

VarNames indexed_names(const std::string& prefix, int n) {
  VarNames v;
  for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

Poly compose(const Poly& p, const std::vector<Poly>& images) {
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](size_t i, int e) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly(Scalar(1)));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Poly t(c);
    for (size_t i = 0; i < images.size(); ++i) {
      int e = m[static_cast<int>(i)];
      if (e < 0) throw std::invalid_argument("compose: negative exponent");
      if (e == 0) continue;
      rest.set(static_cast<int>(i), 0);
      t = t * power(i, e);
    }
    out += t.mul_term(rest, Scalar(1));
  }
  return out;
}

Poly homogeneous_part(const Poly& p, int d) {
  std::vector<Poly::Term> ts;
  for (const auto& t : p.terms())
    if (t.first.total_degree() == d) ts.push_back(t);
  return Poly::from_sorted(std::move(ts));
}

}  // namespace cms
