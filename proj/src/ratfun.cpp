#include "cms/ratfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cms {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Monomial to_monomial(const std::vector<int>& c, int scale = 1) {
  Monomial m;
  for (size_t t = 0; t < c.size(); ++t) m.set(static_cast<int>(t), c[t] * scale);
  return m;
}

// Splits c = sign * g * prim with prim normalized (first nonzero entry > 0).
void split_direction(const std::vector<int>& c, int& sign, int& g, std::vector<int>& prim) {
  g = 0;
  for (int x : c) g = std::gcd(g, std::abs(x));
  if (g == 0) throw std::invalid_argument("zero lattice vector");
  sign = 1;
  for (int x : c)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  prim.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) prim[i] = sign * c[i] / g;
}

DenExps normalized_den(DenExps d) {
  std::sort(d.begin(), d.end());
  DenExps out;
  for (auto& [i, e] : d) {
    if (!out.empty() && out.back().first == i)
      out.back().second += e;
    else
      out.emplace_back(i, e);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0; }), out.end());
  for (auto& p : out)
    if (p.second < 0) throw std::domain_error("negative denominator exponent");
  return out;
}

DenExps den_max(const DenExps& a, const DenExps& b) {
  DenExps out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

DenExps den_sum(const DenExps& a, const DenExps& b) {
  DenExps all = a;
  all.insert(all.end(), b.begin(), b.end());
  return normalized_den(std::move(all));
}


}  // namespace

FactorBasis::FactorBasis(Model model, int nvars, VarNames names)
    : model_(model), nvars_(nvars), names_(std::move(names)) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("FactorBasis: bad variable count");
  if (names_.empty()) names_ = indexed_names(model == Model::Geometric ? "z" : "X", nvars);
}

int FactorBasis::find(const std::vector<int>& c, Kind kind) const {
  for (int i = 0; i < size(); ++i)
    if (factors_[i].kind == kind && factors_[i].c == c) return i;
  return -1;
}

int FactorBasis::add_geometric(const std::vector<int>& c, Kind kind) {
  if (model_ != Model::Geometric || kind == kLinear) throw std::invalid_argument("add_geometric: wrong model or kind");
  int sign, g;
  std::vector<int> prim;
  split_direction(c, sign, g, prim);
  if (sign != 1 || g != 1 || static_cast<int>(c.size()) != nvars_)
    throw std::invalid_argument("add_geometric: vector not primitive and normalized");
  if (int i = find(c, kind); i >= 0) return i;
  Factor f;
  f.c = c;
  f.kind = kind;
  f.lead = static_cast<int>(std::find_if(c.begin(), c.end(), [](int x) { return x != 0; }) - c.begin());
  Scalar tail = kind == kMinusOne ? Scalar(-1) : Scalar(1);
  f.poly = Poly::term(to_monomial(c, kind == kSquarePlusOne ? 2 : 1), Scalar(1)) + Poly(tail);
  for (int t = 0; t < nvars_; ++t) f.derivs.push_back(f.poly.euler(t));
  factors_.push_back(std::move(f));
  return size() - 1;
}

int FactorBasis::add_affine(const std::vector<int>& c) {
  if (model_ != Model::Affine) throw std::invalid_argument("add_affine: wrong model");
  int sign, g;
  std::vector<int> prim;
  split_direction(c, sign, g, prim);
  if (sign != 1 || g != 1 || static_cast<int>(c.size()) != nvars_)
    throw std::invalid_argument("add_affine: vector not primitive and normalized");
  if (int i = find(c, kLinear); i >= 0) return i;
  Factor f;
  f.c = c;
  f.kind = kLinear;
  f.lead = static_cast<int>(std::find_if(c.begin(), c.end(), [](int x) { return x != 0; }) - c.begin());
  for (int t = 0; t < nvars_; ++t) f.poly += Poly::term(Monomial::unit(t), Scalar(c[t]));
  for (int t = 0; t < nvars_; ++t) f.derivs.push_back(f.poly.partial(t));
  factors_.push_back(std::move(f));
  return size() - 1;
}

void FactorBasis::add_direction(const std::vector<int>& c) {
  int sign, g;
  std::vector<int> prim;
  split_direction(c, sign, g, prim);
  if (model_ == Model::Geometric) {
    add_geometric(prim, kMinusOne);
    add_geometric(prim, kPlusOne);
    add_geometric(prim, kSquarePlusOne);
  } else {
    add_affine(prim);
  }
}

bool FactorBasis::try_divide(const Poly& num, int i, Poly& quotient) const {
  const Factor& f = factors_[i];
  return f.kind == kLinear ? divide_affine(num, f, quotient) : divide_geometric(num, f, quotient);
}

bool FactorBasis::divide_geometric(const Poly& num, const Factor& f, Poly& q) const {
  // Group terms into cosets of Z*c; each coset is a Laurent polynomial in u = zeta^c.
  const int i0 = f.lead, ci = f.c[i0];
  const Monomial step = to_monomial(f.c);
  std::vector<int> dcoef;  // divisor coefficients by power of u, monic
  switch (f.kind) {
    case kMinusOne: dcoef = {-1, 1}; break;
    case kPlusOne: dcoef = {1, 1}; break;
    default: dcoef = {1, 0, 1}; break;
  }
  const int d = static_cast<int>(dcoef.size()) - 1;
  struct Item {
    Monomial key;
    int j;
    const Scalar* c;
  };
  std::vector<Item> items;
  items.reserve(num.size());
  for (const auto& [m, c] : num.terms()) {
    int j = floor_div(m[i0], ci);
    items.push_back({m / step.scaled(j), j, &c});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.j < b.j;
  });
  std::vector<Poly::Term> out;
  size_t s = 0;
  while (s < items.size()) {
    size_t e = s;
    while (e < items.size() && items[e].key == items[s].key) ++e;
    int jmin = items[s].j, jmax = items[e - 1].j;
    int len = jmax - jmin + 1;
    if (len <= d) return false;
    std::vector<Scalar> a(len);
    for (size_t x = s; x < e; ++x) a[items[x].j - jmin] = *items[x].c;
    for (int idx = len - 1; idx >= d; --idx) {
      if (a[idx].is_zero()) continue;
      Scalar lead = a[idx];
      out.emplace_back(items[s].key * step.scaled(jmin + idx - d), lead);
      for (int t = 0; t < d; ++t)
        if (dcoef[t] != 0) a[idx - d + t] -= lead * Scalar(dcoef[t]);
      a[idx] = Scalar();
    }
    for (int t = 0; t < d; ++t)
      if (!a[t].is_zero()) return false;
    s = e;
  }
  q = Poly::from_terms(std::move(out));
  return true;
}

bool FactorBasis::divide_affine(const Poly& num, const Factor& f, Poly& q) const {
  // Synthetic division in the lead variable x: num = sum a_j x^j, f = c0 x + L,
  // quotient sum q_j x^j with q_{j-1} = (a_j - L q_j) / c0 and a_0 = L q_0.
  const int i0 = f.lead;
  const Monomial unit = Monomial::unit(i0);
  Scalar inv_c0 = f.poly.coefficient(unit).inverse();
  Poly rest = f.poly - Poly::term(unit, f.poly.coefficient(unit));
  std::map<int, std::vector<Poly::Term>> slices;
  for (const auto& [m, c] : num.terms()) {
    Monomial r = m;
    r.set(i0, 0);
    slices[m[i0]].emplace_back(r, c);
  }
  if (slices.empty()) {
    q = Poly();
    return true;
  }
  int top = slices.rbegin()->first;
  if (top == 0) return false;
  auto slice = [&](int j) {
    auto it = slices.find(j);
    return it == slices.end() ? Poly() : Poly::from_terms(std::move(it->second));
  };
  std::vector<Poly::Term> out;
  Poly qj;  // q_j, starting from q_top = 0
  for (int j = top; j >= 1; --j) {
    Poly next = (slice(j) - rest * qj) * inv_c0;
    for (const auto& [m, c] : next.terms()) out.emplace_back(m * Monomial::unit(i0, j - 1), c);
    qj = std::move(next);
  }
  if (slice(0) != rest * qj) return false;
  q = Poly::from_terms(std::move(out));
  return true;
}

Poly FactorBasis::multiply(const Poly& num, int i, int power) const {
  Poly r = num;
  const Poly& f = factors_[i].poly;
  for (int p = 0; p < power; ++p) {
    Poly acc;
    for (const auto& [m, c] : f.terms()) acc += r.mul_term(m, c);
    r = std::move(acc);
  }
  return r;
}

Poly FactorBasis::cofactor(const DenExps& target, const DenExps& d) const {
  Poly r(Scalar(1));
  for (const auto& [i, k] : target) {
    int a = k;
    for (const auto& [j, x] : d)
      if (j == i) a -= x;
    if (a) r = multiply(r, i, a);
  }
  return r;
}

std::string FactorBasis::factor_string(int i) const { return "(" + render(factors_[i].poly, names_) + ")"; }

RatFun RatFun::make(const FactorBasis* basis, Poly num, DenExps den) {
  RatFun r(basis, std::move(num));
  r.den_ = normalized_den(std::move(den));
  r.reduce();
  return r;
}

RatFun RatFun::make_reduced(const FactorBasis* basis, Poly num, DenExps den) {
  RatFun r(basis, std::move(num));
  r.den_ = std::move(den);
  return r;
}

RatFun RatFun::inverse_binomial(const FactorBasis* basis, const std::vector<int>& c, int kind, int power) {
  int sign, g;
  std::vector<int> prim;
  split_direction(c, sign, g, prim);
  // zeta^c -/+ 1 = unit * zeta^shift * (u^g -/+ 1), u = zeta^prim.
  Scalar unit(1);
  Monomial shift;
  if (sign < 0) {
    shift = to_monomial(prim, -g);
    if (kind == 1) unit = Scalar(-1);
  }
  std::vector<FactorBasis::Kind> parts;
  if (kind == 1) {
    if (g == 1) parts = {FactorBasis::kMinusOne};
    else if (g == 2) parts = {FactorBasis::kMinusOne, FactorBasis::kPlusOne};
    else if (g == 4) parts = {FactorBasis::kMinusOne, FactorBasis::kPlusOne, FactorBasis::kSquarePlusOne};
  } else if (kind == 2) {
    if (g == 1) parts = {FactorBasis::kPlusOne};
    else if (g == 2) parts = {FactorBasis::kSquarePlusOne};
  }
  if (parts.empty()) throw std::invalid_argument("inverse_binomial: unsupported lattice content");
  DenExps den;
  for (auto k : parts) {
    int idx = basis->find(prim, k);
    if (idx < 0) throw std::invalid_argument("inverse_binomial: factor not registered");
    den.emplace_back(idx, power);
  }
  Poly num = Poly::term(shift.scaled(-power), unit.pow(-power));
  return make_reduced(basis, std::move(num), normalized_den(std::move(den)));
}

RatFun RatFun::inverse_linear(const FactorBasis* basis, const std::vector<int>& c, int power) {
  int sign, g;
  std::vector<int> prim;
  split_direction(c, sign, g, prim);
  int idx = basis->find(prim, FactorBasis::kLinear);
  if (idx < 0) throw std::invalid_argument("inverse_linear: factor not registered");
  return make_reduced(basis, Poly(Scalar(sign * g).pow(-power)), DenExps{{idx, power}});
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [i, e] : den_) {
    Poly q;
    while (e > 0 && basis_->try_divide(num_, i, q)) {
      num_ = std::move(q);
      --e;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](auto& p) { return p.second == 0; }), den_.end());
}

RatFun RatFun::operator-() const { return make_reduced(basis_, -num_, den_); }

RatFun RatFun::operator+(const RatFun& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  const FactorBasis* b = basis_ ? basis_ : o.basis_;
  if (den_ == o.den_) return make(b, num_ + o.num_, den_);
  DenExps e = den_max(den_, o.den_);
  return make(b, num_ * b->cofactor(e, den_) + o.num_ * b->cofactor(e, o.den_), e);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::mul_raw(const RatFun& o) const {
  const FactorBasis* b = basis_ ? basis_ : o.basis_;
  if (is_zero() || o.is_zero()) return RatFun(b);
  return make_reduced(b, num_ * o.num_, den_sum(den_, o.den_));
}

RatFun RatFun::operator*(const RatFun& o) const {
  RatFun r = mul_raw(o);
  if (!r.den_.empty()) r.reduce();
  return r;
}

RatFun RatFun::operator*(const Scalar& s) const {
  if (s.is_zero()) return RatFun(basis_);
  return make_reduced(basis_, num_ * s, den_);
}

RatFun RatFun::derive(int t) const {
  if (den_.empty()) return RatFun(basis_, basis_->derive(num_, t));
  // d(N / prod F^e) = (N' prod F - N sum e_i F_i' prod_{j != i} F_j) / prod F^{e+1}
  Poly acc = basis_->derive(num_, t);
  for (const auto& [i, e] : den_) acc = basis_->multiply(acc, i, 1);
  for (size_t a = 0; a < den_.size(); ++a) {
    const auto& [i, e] = den_[a];
    const Poly& fd = basis_->factor_derivative(i, t);
    if (fd.is_zero()) continue;
    Poly term = num_ * fd * Scalar(e);
    for (size_t b = 0; b < den_.size(); ++b)
      if (b != a) term = basis_->multiply(term, den_[b].first, 1);
    acc -= term;
  }
  DenExps d = den_;
  for (auto& p : d) ++p.second;
  return make(basis_, std::move(acc), std::move(d));
}

RatFun RatFun::doubled() const {
  if (basis_->model() != Model::Geometric) throw std::invalid_argument("doubled: geometric model only");
  Poly n = map_monomials(num_, [](const Monomial& m) { return m.scaled(2); });
  DenExps d;
  for (const auto& [i, e] : den_) {
    const auto& c = basis_->factor_vector(i);
    switch (basis_->factor_kind(i)) {
      case FactorBasis::kMinusOne:
        d.emplace_back(i, e);
        d.emplace_back(basis_->find(c, FactorBasis::kPlusOne), e);
        break;
      case FactorBasis::kPlusOne:
        d.emplace_back(basis_->find(c, FactorBasis::kSquarePlusOne), e);
        break;
      default:
        throw std::invalid_argument("doubled: factor zeta^(4c) + 1 is not in the basis");
    }
  }
  for (const auto& p : d)
    if (p.first < 0) throw std::invalid_argument("doubled: factor not registered");
  return make(basis_, std::move(n), std::move(d));
}

Scalar RatFun::evaluate(const std::vector<Scalar>& point) const {
  Scalar v = cms::evaluate(num_, point);
  for (const auto& [i, e] : den_) {
    Scalar f = cms::evaluate(basis_->poly(i), point);
    if (f.is_zero()) throw std::domain_error("RatFun::evaluate: pole at evaluation point");
    v /= f.pow(e);
  }
  return v;
}

RatFun RatFun::substitute_params(const std::map<int, Scalar>& values) const {
  return make(basis_, cms::substitute_params(num_, values), den_);
}

std::string RatFun::str() const {
  const VarNames empty;
  const VarNames& names = basis_ ? basis_->names() : empty;
  std::string n = render(num_, names);
  if (den_.empty()) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d;
  for (const auto& [i, e] : den_) {
    if (!d.empty()) d += "*";
    d += basis_->factor_string(i);
    if (e != 1) d += "^" + std::to_string(e);
  }
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

void RatSum::add(const RatFun& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = buckets_.try_emplace(f.den_, f.num_);
  if (!inserted) it->second += f.num_;
}

void RatSum::add(const RatFun& f, const Scalar& scale) {
  if (f.is_zero() || scale.is_zero()) return;
  Poly n = f.num_ * scale;
  auto [it, inserted] = buckets_.try_emplace(f.den_, std::move(n));
  if (!inserted) it->second += n;
}

void RatSum::merge(const RatSum& o) {
  for (const auto& [d, n] : o.buckets_) {
    auto [it, inserted] = buckets_.try_emplace(d, n);
    if (!inserted) it->second += n;
  }
}

void RatSum::add_product(const RatFun& f, const RatSum& s) {
  if (f.is_zero()) return;
  for (const auto& [d, n] : s.buckets_) add(f.mul_raw(RatFun::make_reduced(basis_, n, d)));
}

void RatSum::add_product(const RatSum& a, const RatSum& b) {
  for (const auto& [d, n] : a.buckets_) {
    RatFun f = RatFun::make_reduced(basis_, n, d);
    for (const auto& [e, m] : b.buckets_) add(f.mul_raw(RatFun::make_reduced(basis_, m, e)));
  }
}

RatSum RatSum::derive(int t) const {
  RatSum r(basis_);
  for (const auto& [d, n] : buckets_) r.add(RatFun::make_reduced(basis_, n, d).derive(t));
  return r;
}

RatFun RatSum::result() const {
  std::vector<RatFun> parts;
  for (const auto& [d, n] : buckets_)
    if (!n.is_zero()) parts.push_back(RatFun::make(basis_, n, d));
  if (parts.empty()) return RatFun(basis_);
  while (parts.size() > 1) {
    std::vector<RatFun> next;
    for (size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace cms
