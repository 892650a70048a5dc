#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cms/params.hpp"
#include "cms/polynomial.hpp"

namespace cms {

std::string render_monomial(const Monomial& m, const VarNames& names);

/// How a coefficient prints inside a sum of terms.
struct CoeffText {
  std::string body;  // without a leading minus sign when `negative`
  bool negative = false;
  bool atomic = true;  // safe to juxtapose with "*" without parentheses
  bool unit = false;   // body is "1"
};

CoeffText coeff_text(const mpz_class& c);

/// Canonical rendering: terms in descending graded-lex order.
template <class C>
std::string render(const Polynomial<C>& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::vector<const typename Polynomial<C>::Term*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](auto* a, auto* b) { return Monomial::grlex_less(b->first, a->first); });
  std::string out;
  bool first = true;
  for (auto* t : ts) {
    CoeffText c = coeff_text(t->second);
    std::string mon = render_monomial(t->first, names);
    std::string body;
    if (mon.empty()) {
      body = c.atomic ? c.body : "(" + c.body + ")";
    } else if (c.unit) {
      body = mon;
    } else {
      body = (c.atomic ? c.body : "(" + c.body + ")") + "*" + mon;
    }
    if (first) {
      out = (c.negative ? "-" : "") + body;
    } else {
      out += c.negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace cms
