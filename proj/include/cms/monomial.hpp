#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

namespace cms {

/// Upper bound on the number of variables of any single polynomial ring used
/// by the library (parameters, geometric coordinates, weights, ...).
inline constexpr int kMaxVars = 10;

/// Exponent vector with signed entries, so the same type serves ordinary
/// polynomials, Laurent polynomials and derivative multi-indices.
class Monomial {
 public:
  Monomial() { e_.fill(0); }
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > static_cast<size_t>(kMaxVars))
      throw std::length_error("Monomial: too many variables");
    e_.fill(0);
    int i = 0;
    for (int x : exps) e_[i++] = static_cast<int16_t>(x);
  }

  static Monomial unit(int var, int power = 1) {
    check_var(var);
    Monomial m;
    m.e_[var] = static_cast<int16_t>(power);
    return m;
  }

  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) {
    check_var(i);
    e_[i] = static_cast<int16_t>(v);
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int16_t x) { return x == 0; });
  }
  int total_degree() const {
    int s = 0;
    for (auto x : e_) s += x;
    return s;
  }
  bool has_negative() const {
    return std::any_of(e_.begin(), e_.end(), [](int16_t x) { return x < 0; });
  }
  /// Number of leading slots that can be nonzero.
  int span() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e_[i] != 0) return i + 1;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<int16_t>(e_[i] + o.e_[i]);
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<int16_t>(e_[i] - o.e_[i]);
    return r;
  }
  Monomial scaled(int s) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<int16_t>(e_[i] * s);
    return r;
  }
  /// Componentwise minimum (gcd of two ordinary monomials).
  Monomial min_with(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
  }
  /// True if every exponent of *this is <= the matching exponent of o.
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  /// Lexicographic order with variable 0 most significant. This is a monomial
  /// order and is the storage order of every polynomial.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  /// Graded lexicographic comparison (total degree first, then lex).
  static bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a < b;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto x : e_) h = (h ^ static_cast<uint16_t>(x)) * 1099511628211ull;
    return h;
  }

 private:
  static void check_var(int i) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("Monomial: variable index out of range");
  }
  std::array<int16_t, kMaxVars> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cms
