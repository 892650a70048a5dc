#include "cms/scalar.hpp"

#include <stdexcept>
#include <vector>

#include "cms/render.hpp"

namespace cms {

namespace {

bool is_one_poly(const ZPoly& p) {
  return p.size() == 1 && p.terms()[0].first.is_one() && p.terms()[0].second == 1;
}

}  // namespace

Scalar::Scalar(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  num_ = ZPoly(c.get_num());
  den_ = ZPoly(c.get_den());
}

Scalar::Scalar(const ZPoly& num, const ZPoly& den) : num_(num), den_(den) { canonicalize(); }

void Scalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (num_.is_zero()) {
    den_ = ZPoly(mpz_class(1));
    return;
  }
  if (!is_one_poly(den_)) {
    ZPoly g = gcd(num_, den_);
    if (!is_one_poly(g)) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  if (sgn(den_.lex_leading().second) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("Scalar is not a rational number: " + str());
  mpq_class q(num_.constant_term(), den_.constant_term());
  q.canonicalize();
  return q;
}

bool Scalar::uses_param(int index) const {
  for (const ZPoly* p : {&num_, &den_})
    for (const auto& t : p->terms())
      if (t.first[index] != 0) return true;
  return false;
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_rational() && o.is_rational()) return Scalar(to_rational() + o.to_rational());
  bool d1 = is_one_poly(den_), d2 = is_one_poly(o.den_);
  if (d1 && d2) return Scalar(Raw{}, num_ + o.num_, den_);
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  if (d1) return Scalar(Raw{}, num_ * o.den_ + o.num_, o.den_);
  if (d2) return Scalar(Raw{}, num_ + o.num_ * den_, den_);
  // Henrici: work modulo g = gcd(den, o.den) only.
  ZPoly g = gcd(den_, o.den_);
  ZPoly b1 = divide_exact(den_, g), d1p = divide_exact(o.den_, g);
  ZPoly t = num_ * d1p + o.num_ * b1;
  if (t.is_zero()) return Scalar();
  ZPoly g2 = gcd(t, g);
  if (!is_one_poly(g2)) {
    t = divide_exact(t, g2);
    g = divide_exact(g, g2);
  }
  Scalar r(Raw{}, std::move(t), b1 * d1p * g);
  if (sgn(r.den_.lex_leading().second) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (is_rational() && o.is_rational()) return Scalar(to_rational() * o.to_rational());
  bool d1 = is_one_poly(den_), d2 = is_one_poly(o.den_);
  if (d1 && d2) return Scalar(Raw{}, num_ * o.num_, den_);
  ZPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d2) {
    ZPoly g = gcd(a, d);
    if (!is_one_poly(g)) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!d1) {
    ZPoly g = gcd(c, b);
    if (!is_one_poly(g)) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  Scalar r(Raw{}, a * c, b * d);
  if (sgn(r.den_.lex_leading().second) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Scalar r(Raw{}, den_, num_);
  if (sgn(r.den_.lex_leading().second) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return Scalar(Raw{}, num_.pow(e), den_.pow(e));
}

namespace {

// p(n/d) * d^deg, with deg the degree of p in `var`.
ZPoly homogenized_substitute(const ZPoly& p, int var, const ZPoly& n, const ZPoly& d, int deg) {
  std::vector<ZPoly> np{ZPoly(mpz_class(1))}, dp{ZPoly(mpz_class(1))};
  for (int i = 1; i <= deg; ++i) {
    np.push_back(np.back() * n);
    dp.push_back(dp.back() * d);
  }
  ZPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m[var];
    Monomial rest = m;
    rest.set(var, 0);
    out += (np[e] * dp[deg - e]).mul_term(rest, c);
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(int index, const Scalar& value) const {
  if (!uses_param(index)) return *this;
  int dn = num_.degree_in(index), dd = den_.degree_in(index);
  ZPoly hn = homogenized_substitute(num_, index, value.num_, value.den_, dn);
  ZPoly hd = homogenized_substitute(den_, index, value.num_, value.den_, dd);
  if (hd.is_zero()) throw std::domain_error("Scalar: substitution makes the denominator vanish");
  // num/den = (hn / d^dn) / (hd / d^dd)
  ZPoly dpow_n = value.den_.pow(std::max(0, dd - dn));
  ZPoly dpow_d = value.den_.pow(std::max(0, dn - dd));
  return Scalar(hn * dpow_n, hd * dpow_d);
}

Scalar Scalar::substitute(const std::map<int, Scalar>& values) const {
  Scalar r = *this;
  for (const auto& [i, v] : values) r = r.substitute(i, v);
  return r;
}

std::string Scalar::str() const {
  std::string n = to_string(num_);
  if (is_one_poly(den_)) return n;
  std::string d = to_string(den_);
  if (num_.size() > 1) n = "(" + n + ")";
  if (d.find_first_of("*+- ") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_string(const Scalar& s) { return s.str(); }

CoeffText coeff_text(const Scalar& s) {
  CoeffText t;
  if (s.num().size() == 1) {
    t.negative = sgn(s.num().terms()[0].second) < 0;
    t.body = (t.negative ? -s : s).str();
    t.atomic = true;
    t.unit = (t.body == "1");
  } else {
    t.body = s.str();
    t.atomic = false;
  }
  return t;
}

}  // namespace cms
