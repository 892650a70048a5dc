#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cms/monomial.hpp"

namespace cms {

inline bool coeff_is_zero(const mpz_class& z) { return sgn(z) == 0; }

/// Sparse multivariate (Laurent) polynomial. Terms are kept strictly
/// increasing in the lexicographic monomial order with no zero coefficients,
/// so two polynomials are equal iff their term vectors are equal.
template <class C>
class Polynomial {
 public:
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(C c) {
    if (!coeff_is_zero(c)) terms_.emplace_back(Monomial{}, std::move(c));
  }

  static Polynomial term(const Monomial& m, C c) {
    Polynomial p;
    if (!coeff_is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  static Polynomial variable(int var, int power = 1) { return term(Monomial::unit(var, power), C(1)); }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Polynomial p;
    p.terms_.reserve(ts.size());
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (coeff_is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!coeff_is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Caller guarantees sorted, distinct, nonzero.
  static Polynomial from_sorted(std::vector<Term> ts) {
    Polynomial p;
    p.terms_ = std::move(ts);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  C constant_term() const {
    if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
    // lex order puts the all-zero exponent first only when no negative
    // exponents are present; fall back to a search for Laurent polynomials.
    for (const auto& t : terms_)
      if (t.first.is_one()) return t.second;
    return C(0);
  }
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }

  /// Largest term in storage (lex) order.
  const Term& lex_leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.back();
  }
  const Term& grlex_leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
      if (Monomial::grlex_less(best->first, t.first)) best = &t;
    return *best;
  }

  int degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[var] > d) d = t.first[var];
      first = false;
    }
    return d;
  }
  int min_degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      if (first || t.first[var] < d) d = t.first[var];
      first = false;
    }
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
  }
  /// Number of variable slots in use.
  int span() const {
    int s = 0;
    for (const auto& t : terms_) s = std::max(s, t.first.span());
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = merge(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
    if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prods.emplace_back(a.first * b.first, a.second * b.second);
    return from_terms(std::move(prods));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial operator*(const C& c) const {
    if (coeff_is_zero(c)) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  /// Multiplication by c * x^m; the monomial shift preserves term order.
  Polynomial mul_term(const Monomial& m, const C& c) const {
    if (coeff_is_zero(c)) return {};
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of polynomial");
    Polynomial r(C(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// Euler derivation x_i d/dx_i.
  Polynomial euler(int var) const {
    Polynomial r;
    for (const auto& t : terms_) {
      int a = t.first[var];
      if (a != 0) r.terms_.emplace_back(t.first, t.second * C(a));
    }
    return r;
  }
  /// Ordinary partial derivative d/dx_i.
  Polynomial partial(int var) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      int a = t.first[var];
      if (a != 0) ts.emplace_back(t.first / Monomial::unit(var), t.second * C(a));
    }
    return from_terms(std::move(ts));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial merge(const Polynomial& o, bool subtract) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        r.terms_.emplace_back(o.terms_[j].first, subtract ? C(-o.terms_[j].second) : o.terms_[j].second);
        ++j;
      } else {
        C c = subtract ? C(terms_[i].second - o.terms_[j].second) : C(terms_[i].second + o.terms_[j].second);
        if (!coeff_is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

}  // namespace cms
