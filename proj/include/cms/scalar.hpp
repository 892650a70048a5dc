#pragma once

#include <map>
#include <string>

#include "cms/params.hpp"
#include "cms/zpoly.hpp"

namespace cms {

/// Element of Q(params): a reduced quotient num/den of integer polynomials.
/// Canonical form: gcd(num, den) = 1, den has positive lex-leading
/// coefficient, zero is 0/1. Structural equality is therefore equality.
class Scalar {
 public:
  Scalar() : num_(), den_(mpz_class(1)) {}
  Scalar(int v) : num_(mpz_class(v)), den_(mpz_class(1)) {}  // NOLINT(implicit)
  Scalar(const mpz_class& v) : num_(v), den_(mpz_class(1)) {}  // NOLINT(implicit)
  Scalar(const mpq_class& v);                                    // NOLINT(implicit)
  explicit Scalar(const ZPoly& p) : num_(p), den_(mpz_class(1)) {}
  Scalar(const ZPoly& num, const ZPoly& den);

  static Scalar param(int index) { return Scalar(ZPoly::variable(index)); }
  static Scalar rational(long n, long d) { return Scalar(mpq_class(n, d)); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term() == den_.constant_term(); }
  /// True for elements of Q.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class to_rational() const;
  /// True when parameter `index` occurs in num or den.
  bool uses_param(int index) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Replaces parameter `index` by `value`. Throws if the denominator
  /// vanishes under the substitution.
  Scalar substitute(int index, const Scalar& value) const;
  Scalar substitute(const std::map<int, Scalar>& values) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Raw {};
  Scalar(Raw, ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  ZPoly num_;
  ZPoly den_;
};

inline bool coeff_is_zero(const Scalar& s) { return s.is_zero(); }

struct CoeffText;
CoeffText coeff_text(const Scalar& s);

std::string to_string(const Scalar& s);

}  // namespace cms
