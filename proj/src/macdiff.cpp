#include "cms/macdiff.hpp"

#include <stdexcept>

#include "cms/render.hpp"
#include "cms/rootsys.hpp"

namespace cms {

int coord_slot(int index) {
  if (index < 0 || index >= kMaxCoords) throw std::out_of_range("too many coordinates for a difference operator");
  return kCoordSlot + index;
}

Scalar coord(int index) { return Scalar::param(coord_slot(index)); }

VarNames difference_names(int n, int m) {
  VarNames names(kMaxVars, "");
  names[kParamQ] = "q";
  names[kParamT] = "t";
  for (int i = 0; i < n; ++i) names[coord_slot(i)] = "x" + std::to_string(i + 1);
  for (int j = 0; j < m; ++j) names[coord_slot(n + j)] = "y" + std::to_string(j + 1);
  return names;
}

std::string render_rational(const Scalar& s, const VarNames& names) {
  std::string num = render(s.num(), names);
  if (s.den().is_constant() && s.den().constant_term() == 1) return num;
  if (s.num().size() > 1) num = "(" + num + ")";
  return num + "/(" + render(s.den(), names) + ")";
}

namespace {

Scalar power_of(int slot, int e) {
  Scalar base = Scalar::param(slot);
  return e >= 0 ? base.pow(e) : base.inverse().pow(-e);
}

// q^c0 t^c1 for an exponent c0 + c1 k.
std::pair<int, int> formal_exponent(const Scalar& e) {
  if (!e.den().is_constant()) throw std::domain_error("exponent is not linear in k: " + e.str());
  mpz_class d = e.den().constant_term();
  int c0 = 0, c1 = 0;
  for (const auto& [mono, c] : e.num().terms()) {
    if (c % d != 0) throw std::domain_error("exponent is not integral: " + e.str());
    int v = static_cast<int>(mpz_class(c / d).get_si());
    if (mono.is_one()) c0 = v;
    else if (mono == Monomial::unit(kParamK)) c1 = v;
    else throw std::domain_error("exponent is not linear in k: " + e.str());
  }
  return {c0, c1};
}

Scalar q_power(const Scalar& e) {
  auto [c0, c1] = formal_exponent(e);
  return power_of(kParamQ, c0) * power_of(kParamT, c1);
}

// Simultaneous renaming of the slots of a Scalar.
ZPoly rename(const ZPoly& p, const std::vector<int>& target) {
  std::vector<ZPoly::Term> ts;
  for (const auto& [mono, c] : p.terms()) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      if (mono[i]) r.set(target[i], mono[i]);
    ts.emplace_back(r, c);
  }
  return ZPoly::from_terms(std::move(ts));
}

Scalar rename(const Scalar& s, const std::vector<int>& target) {
  return Scalar(rename(s.num(), target), rename(s.den(), target));
}

}  // namespace

void ShiftOp::add_term(const Shift& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Shift ShiftOp::single(int a, bool by_t) const {
  Shift s{std::vector<int>(coords(), 0), std::vector<int>(coords(), 0)};
  (by_t ? s.texp : s.qexp)[a] = 1;
  return s;
}

Scalar ShiftOp::apply(const Scalar& f) const {
  Scalar out;
  for (const auto& [s, c] : terms_) {
    Scalar g = f;
    for (int a = 0; a < coords(); ++a) {
      if (!s.qexp[a] && !s.texp[a]) continue;
      Scalar scale = power_of(kParamQ, s.qexp[a]) * power_of(kParamT, s.texp[a]);
      g = g.substitute(coord_slot(a), scale * coord(a));
    }
    out += c * g;
  }
  return out;
}

std::string ShiftOp::str() const {
  VarNames names = difference_names(n_, m_);
  std::string out;
  for (const auto& [s, c] : terms_) {
    std::string shift;
    for (int a = 0; a < coords(); ++a) {
      if (!s.qexp[a] && !s.texp[a]) continue;
      std::string factor;
      if (s.qexp[a]) factor += "q" + (s.qexp[a] == 1 ? "" : "^" + std::to_string(s.qexp[a]));
      if (s.texp[a]) factor += (factor.empty() ? "" : "*") + std::string("t") + (s.texp[a] == 1 ? "" : "^" + std::to_string(s.texp[a]));
      shift += "T[" + names[coord_slot(a)] + " -> " + factor + "*" + names[coord_slot(a)] + "]";
    }
    if (!out.empty()) out += "\n+ ";
    out += "(" + render_rational(c, names) + ")" + (shift.empty() ? "" : " " + shift);
  }
  return out.empty() ? "0" : out;
}

ShiftOp build_deformed_mr(int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("need n, m >= 0 and n + m >= 1");
  ShiftOp d(n, m);
  Scalar q = Scalar::param(kParamQ), t = Scalar::param(kParamT);
  auto x = [](int i) { return coord(i); };
  auto y = [n](int j) { return coord(n + j); };
  for (int i = 0; i < n; ++i) {
    Scalar a(1);
    for (int k = 0; k < n; ++k)
      if (k != i) a *= (x(i) - t * x(k)) / (x(i) - x(k));
    for (int j = 0; j < m; ++j) a *= (x(i) - q * y(j)) / (x(i) - y(j));
    d.add_term(d.single(i, false), a / (Scalar(1) - q));
  }
  for (int j = 0; j < m; ++j) {
    Scalar b(1);
    for (int i = 0; i < n; ++i) b *= (y(j) - t * x(i)) / (y(j) - x(i));
    for (int l = 0; l < m; ++l)
      if (l != j) b *= (y(j) - q * y(l)) / (y(j) - y(l));
    d.add_term(d.single(n + j, true), b / (Scalar(1) - t));
  }
  return d;
}

ShiftOp macdonald_operator(int n) {
  ShiftOp d(n, 0);
  Scalar t = Scalar::param(kParamT);
  for (int i = 0; i < n; ++i) {
    Scalar a(1);
    for (int j = 0; j < n; ++j)
      if (j != i) a *= (t * coord(i) - coord(j)) / (coord(i) - coord(j));
    d.add_term(d.single(i, false), a);
  }
  return d;
}

ShiftOp dual(const ShiftOp& d) {
  int n = d.n(), m = d.m();
  std::vector<int> target(kMaxVars);
  for (int s = 0; s < kMaxVars; ++s) target[s] = s;
  target[kParamQ] = kParamT;
  target[kParamT] = kParamQ;
  for (int i = 0; i < n; ++i) target[coord_slot(i)] = coord_slot(m + i);
  for (int j = 0; j < m; ++j) target[coord_slot(n + j)] = coord_slot(j);
  ShiftOp out(m, n);
  for (const auto& [s, c] : d.terms()) {
    Shift r{std::vector<int>(n + m, 0), std::vector<int>(n + m, 0)};
    for (int i = 0; i < n; ++i) {
      r.qexp[m + i] = s.texp[i];
      r.texp[m + i] = s.qexp[i];
    }
    for (int j = 0; j < m; ++j) {
      r.qexp[j] = s.texp[n + j];
      r.texp[j] = s.qexp[n + j];
    }
    out.add_term(r, rename(c, target));
  }
  return out;
}

bool duality_check(int n, int m) { return dual(build_deformed_mr(n, m)) == build_deformed_mr(m, n); }

ShiftOp root_system_form(int n, int m) {
  ShiftOp out(n, m);
  Scalar q = Scalar::param(kParamQ);
  if (n + m < 2) {
    // a single coordinate carries no roots
    Shift s = out.single(0, n == 0);
    out.add_term(s, Scalar(1) / (Scalar(1) - (n == 0 ? Scalar::param(kParamT) : q)));
    return out;
  }
  auto g = build_system(Family::A, n, m);
  int d = g->dim();
  Scalar generic_k = Scalar::rational(7, 3);
  auto unit = [d](int a) {
    GVec e(d, Scalar(0));
    e[a] = Scalar(1);
    return e;
  };
  // q^{-a} as a Laurent monomial in the coordinates
  auto q_root = [&](const GVec& a) {
    Scalar r(1);
    for (int c = 0; c < d; ++c) {
      int e = static_cast<int>(a[c].to_rational().get_num().get_si());
      r *= power_of(coord_slot(c), -e);
    }
    return r;
  };
  for (const GVec& v : g->homogeneous_orbit()) {
    Scalar coef = Scalar(1) / (Scalar(1) - q_power(g->pairing(v, v)));
    for (const Root& a : g->roots()) {
      Scalar av = g->pairing(a.v, v);
      Scalar co = Scalar(2) * av / g->pairing(a.v, a.v);
      if (co.substitute(kParamK, generic_k).to_rational() <= 0) continue;
      Scalar qa = q_root(a.v);
      coef *= (Scalar(1) - q_power(a.mult * av) * qa) / (Scalar(1) - qa);
    }
    Shift s{std::vector<int>(d, 0), std::vector<int>(d, 0)};
    for (int c = 0; c < d; ++c) {
      auto [c0, c1] = formal_exponent(g->pairing(unit(c), v));
      s.qexp[c] = c0;
      s.texp[c] = c1;
    }
    out.add_term(s, coef);
  }
  return out;
}

bool rootsystem_form_check(int n, int m) { return root_system_form(n, m) == build_deformed_mr(n, m); }

ReductionCheck classical_reduction_check(int n) {
  ShiftOp d = build_deformed_mr(n, 0);
  ShiftOp mac = macdonald_operator(n);
  Scalar q = Scalar::param(kParamQ), t = Scalar::param(kParamT);
  ReductionCheck out;
  out.inverted_coordinates = out.inverted_t = d.terms().size() == mac.terms().size();
  for (const auto& [s, c] : d.terms()) {
    auto it = mac.terms().find(s);
    if (it == mac.terms().end()) return {};
    Scalar a = c * (Scalar(1) - q);
    Scalar inv_x = it->second;
    for (int i = 0; i < n; ++i) inv_x = inv_x.substitute(coord_slot(i), coord(i).inverse());
    Scalar inv_t = t.pow(n - 1) * it->second.substitute(kParamT, t.inverse());
    out.inverted_coordinates = out.inverted_coordinates && a == inv_x;
    out.inverted_t = out.inverted_t && a == inv_t;
  }
  return out;
}

P1Analogue deformed_p1_analogue(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("need both blocks nonempty");
  ShiftOp d = build_deformed_mr(n, m);
  Scalar sx, sy;
  for (int i = 0; i < n; ++i) sx += coord(i);
  for (int j = 0; j < m; ++j) sy += coord(n + j);
  Scalar dx = d.apply(sx), dy = d.apply(sy);
  Scalar pole = coord(0) - coord(n);
  Scalar rx = (dx * pole).substitute(coord_slot(n), coord(0));
  Scalar ry = (dy * pole).substitute(coord_slot(n), coord(0));
  P1Analogue out;
  if (ry.is_zero()) return out;
  out.coefficient = -rx / ry;
  out.image = dx + out.coefficient * dy;
  bool polynomial = true;
  for (const auto& [mono, c] : out.image.den().terms())
    for (int a = 0; a < n + m; ++a)
      if (mono[coord_slot(a)]) polynomial = false;
  out.polynomial_image = polynomial;
  return out;
}

namespace {

using Series = std::vector<Scalar>;  // coefficients of h^0, h^1, ...

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series series_inverse(const Series& a) {
  Series out(a.size(), Scalar(0));
  out[0] = a[0].inverse();
  for (size_t r = 1; r < a.size(); ++r) {
    Scalar s;
    for (size_t j = 1; j <= r; ++j) s += a[j] * out[r - j];
    out[r] = -s * out[0];
  }
  return out;
}

// e^{c h}
Series exp_series(const Scalar& c, int len) {
  Series out(len, Scalar(0));
  Scalar term(1);
  for (int r = 0; r < len; ++r) {
    out[r] = term;
    term = term * c / Scalar(r + 1);
  }
  return out;
}

// (e^{c h} - 1) / h
Series exp_minus_one_over_h(const Scalar& c, int len) {
  Series e = exp_series(c, len + 1);
  return Series(e.begin() + 1, e.end());
}

// (u - e^{c h} z) / (u - z)
Series ratio_factor(const Scalar& u, const Scalar& z, const Scalar& c, int len) {
  Series e = exp_series(c, len);
  Series out(len, Scalar(0));
  out[0] = Scalar(1);
  Scalar inv = (u - z).inverse();
  for (int r = 1; r < len; ++r) out[r] = -z * e[r] * inv;
  return out;
}

}  // namespace

DifferentialLimit differential_limit(int n, int m) {
  if (n + m > 3 || n + m < 1) throw std::invalid_argument("differential limit needs 1 <= n + m <= 3");
  const int len = 3;  // h * S through h^2
  Scalar k = Scalar::param(kParamK);
  auto exponent = [](int a) { return Scalar::param(1 + a); };
  auto x = [](int a) { return coord(a); };
  Series total(len, Scalar(0));
  for (int a = 0; a < n + m; ++a) {
    bool is_x = a < n;
    Scalar step = is_x ? Scalar(1) : k;  // q = e^h shifts x, t = e^{kh} shifts y
    Series s = exp_series(step * exponent(a), len);
    for (int b = 0; b < n + m; ++b) {
      if (b == a) continue;
      bool same = (b < n) == is_x;
      s = series_mul(s, ratio_factor(x(a), x(b), same == is_x ? k : Scalar(1), len));
    }
    // h / (1 - e^{step h}) = -1 / ((e^{step h} - 1) / h)
    Series pre = series_inverse(exp_minus_one_over_h(step, len));
    for (auto& c : pre) c = -c;
    s = series_mul(s, pre);
    for (int r = 0; r < len; ++r) total[r] += s[r];
  }
  DifferentialLimit out;
  out.coefficients = total;
  out.names = VarNames(kMaxVars, "");
  out.names[kParamK] = "k";
  for (int a = 0; a < n + m; ++a) {
    out.names[1 + a] = a < n ? "a" + std::to_string(a + 1) : "b" + std::to_string(a - n + 1);
    out.names[coord_slot(a)] = a < n ? "x" + std::to_string(a + 1) : "y" + std::to_string(a - n + 1);
  }
  const Scalar& c1 = total[2];
  std::vector<ZPoly::Term> quad;
  for (const auto& [mono, c] : c1.num().terms()) {
    int deg = 0;
    for (int a = 0; a < n + m; ++a) deg += mono[1 + a];
    if (deg == 2) quad.emplace_back(mono, c);
  }
  out.quadratic_part = Scalar(ZPoly::from_terms(std::move(quad)), c1.den());
  Scalar expected;
  for (int a = 0; a < n + m; ++a) expected += (a < n ? Scalar(1) : k) * exponent(a) * exponent(a);
  out.laplacian_symbol = out.quadratic_part == Scalar::rational(-1, 2) * expected;
  return out;
}

}  // namespace cms
