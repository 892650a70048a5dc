#include "cms/zpoly.hpp"

#include <stdexcept>
#include <vector>

#include "cms/render.hpp"

namespace cms {

std::string render_monomial(const Monomial& m, const VarNames& names) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += i < static_cast<int>(names.size()) ? names[i] : "v" + std::to_string(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

CoeffText coeff_text(const mpz_class& c) {
  CoeffText t;
  t.negative = sgn(c) < 0;
  mpz_class a = abs(c);
  t.body = a.get_str();
  t.unit = (a == 1);
  return t;
}

std::string to_string(const ZPoly& p) { return render(p, param_names()); }

mpz_class integer_content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

// Polynomial in one distinguished variable with ZPoly coefficients that do not
// involve it; index = degree.
using UPoly = std::vector<ZPoly>;

bool uses_var(const ZPoly& p, int v) {
  for (const auto& t : p.terms())
    if (t.first[v] != 0) return true;
  return false;
}

int lowest_var(const ZPoly& a, const ZPoly& b) {
  int best = kMaxVars;
  for (const ZPoly* p : {&a, &b})
    for (const auto& t : p->terms())
      for (int i = 0; i < best; ++i)
        if (t.first[i] != 0) {
          best = i;
          break;
        }
  return best;
}

UPoly to_univ(const ZPoly& p, int v) {
  int d = p.degree_in(v);
  std::vector<std::vector<ZPoly::Term>> parts(d + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.first;
    int e = m[v];
    m.set(v, 0);
    parts[e].emplace_back(m, t.second);
  }
  UPoly u(d + 1);
  for (int i = 0; i <= d; ++i) u[i] = ZPoly::from_terms(std::move(parts[i]));
  return u;
}

ZPoly from_univ(const UPoly& u, int v) {
  std::vector<ZPoly::Term> ts;
  for (size_t i = 0; i < u.size(); ++i)
    for (const auto& t : u[i].terms()) ts.emplace_back(t.first * Monomial::unit(v, static_cast<int>(i)), t.second);
  return ZPoly::from_terms(std::move(ts));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

// lc(B)^(deg A - deg B + 1) * A mod B.
UPoly prem(UPoly r, const UPoly& b) {
  int db = udeg(b);
  int e = udeg(r) - db + 1;
  const ZPoly& lb = b.back();
  while (!r.empty() && udeg(r) >= db) {
    int shift = udeg(r) - db;
    ZPoly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    ZPoly f = lb.pow(e);
    for (auto& c : r) c = c * f;
  }
  return r;
}

ZPoly ucontent(const UPoly& u) {
  ZPoly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  return g;
}

// Subresultant PRS; returns a polynomial associate (over the fraction field
// of the coefficient ring) to the gcd of two primitive polynomials.
UPoly prs_gcd(UPoly a, UPoly b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  ZPoly g(mpz_class(1)), h(mpz_class(1));
  for (;;) {
    int d = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) return b;
    if (udeg(r) == 0) return UPoly{ZPoly(mpz_class(1))};
    a = std::move(b);
    ZPoly div = g * h.pow(d);
    for (auto& c : r) c = divide_exact(c, div);
    b = std::move(r);
    g = a.back();
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = divide_exact(g.pow(d), h.pow(d - 1));
    }
  }
}

ZPoly normalized(ZPoly p) {
  if (!p.is_zero() && sgn(p.lex_leading().second) < 0) p = -p;
  return p;
}

// gcd(c * x^m, b) for a single-term polynomial.
ZPoly gcd_with_term(const ZPoly::Term& t, const ZPoly& b) {
  mpz_class c = integer_content(b);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.second.get_mpz_t());
  Monomial m = t.first;
  for (const auto& bt : b.terms()) m = m.min_with(bt.first);
  return ZPoly::term(m, c);
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.size() == 1) return gcd_with_term(a.terms()[0], b);
  if (b.size() == 1) return gcd_with_term(b.terms()[0], a);
  if (a == b) return normalized(a);
  int v = lowest_var(a, b);
  if (!uses_var(a, v)) return gcd(a, ucontent(to_univ(b, v)));
  if (!uses_var(b, v)) return gcd(ucontent(to_univ(a, v)), b);
  UPoly ua = to_univ(a, v), ub = to_univ(b, v);
  ZPoly ca = ucontent(ua), cb = ucontent(ub);
  ZPoly c = gcd(ca, cb);
  for (auto& x : ua) x = divide_exact(x, ca);
  for (auto& x : ub) x = divide_exact(x, cb);
  UPoly g = prs_gcd(std::move(ua), std::move(ub));
  ZPoly cg = ucontent(g);
  for (auto& x : g) x = divide_exact(x, cg);
  return normalized(c * from_univ(g, v));
}

bool try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) {
    q = ZPoly();
    return true;
  }
  if (b.size() == 1) {
    const auto& [mb, cb] = b.terms()[0];
    std::vector<ZPoly::Term> ts;
    ts.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t())) return false;
      Monomial r = m / mb;
      if (r.has_negative()) return false;
      ts.emplace_back(r, c / cb);
    }
    q = ZPoly::from_sorted(std::move(ts));
    return true;
  }
  const auto& [mb, cb] = b.lex_leading();
  std::vector<ZPoly::Term> out;
  ZPoly r = a;
  while (!r.is_zero()) {
    const auto& [mr, cr] = r.lex_leading();
    if (!mb.divides(mr) || !mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return false;
    Monomial qm = mr / mb;
    mpz_class qc = cr / cb;
    r -= b.mul_term(qm, qc);
    out.emplace_back(qm, std::move(qc));
  }
  std::reverse(out.begin(), out.end());
  q = ZPoly::from_sorted(std::move(out));
  return true;
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

ZPoly substitute(const ZPoly& p, int var, const ZPoly& value) {
  int d = p.degree_in(var);
  std::vector<ZPoly> powers{ZPoly(mpz_class(1))};
  for (int i = 1; i <= d; ++i) powers.push_back(powers.back() * value);
  ZPoly out;
  UPoly u = to_univ(p, var);
  for (int i = 0; i <= d; ++i)
    if (!u[i].is_zero()) out += u[i] * powers[i];
  return out;
}

}  // namespace cms
