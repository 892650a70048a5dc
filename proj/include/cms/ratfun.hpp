#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cms/poly.hpp"

namespace cms {

/// Coordinate model. Geometric: Laurent polynomials in zeta_t = exp((b_t, x))
/// with Euler derivations zeta_t d/dzeta_t. Affine: polynomials in
/// X_t = (b_t, x) with ordinary partial derivatives.
enum class Model { Geometric, Affine };

/// Sparse denominator: (factor index, positive exponent), sorted by index.
using DenExps = std::vector<std::pair<int, int>>;

/// The fixed list of irreducible polynomials allowed in denominators.
///
/// Geometric factors are zeta^c - 1, zeta^c + 1 and zeta^(2c) + 1 for
/// primitive lattice vectors c whose first nonzero entry is positive; affine
/// factors are primitive integer linear forms sum c_t X_t with the same sign
/// convention. Such factors are irreducible and pairwise non-associate, which
/// makes the reduced form of a RatFun unique.
class FactorBasis {
 public:
  enum Kind { kMinusOne = 1, kPlusOne = 2, kSquarePlusOne = 4, kLinear = 0 };

  FactorBasis(Model model, int nvars, VarNames names = {});

  Model model() const { return model_; }
  int nvars() const { return nvars_; }
  const VarNames& names() const { return names_; }
  int size() const { return static_cast<int>(factors_.size()); }

  /// Registers the factor (idempotent) and returns its index. `c` must be
  /// primitive and normalized.
  int add_geometric(const std::vector<int>& c, Kind kind);
  int add_affine(const std::vector<int>& c);
  /// Registers all three geometric factors, or the affine factor, for the
  /// primitive direction of an arbitrary nonzero lattice vector.
  void add_direction(const std::vector<int>& c);
  int find(const std::vector<int>& c, Kind kind) const;

  const Poly& poly(int i) const { return factors_[i].poly; }
  const std::vector<int>& factor_vector(int i) const { return factors_[i].c; }
  Kind factor_kind(int i) const { return factors_[i].kind; }
  /// Derivative of factor i along variable t (Euler or partial per model).
  const Poly& factor_derivative(int i, int t) const { return factors_[i].derivs[t]; }
  Poly derive(const Poly& p, int t) const { return model_ == Model::Geometric ? p.euler(t) : p.partial(t); }

  bool try_divide(const Poly& num, int i, Poly& quotient) const;
  /// num * factor_i^power.
  Poly multiply(const Poly& num, int i, int power) const;
  /// prod_i F_i^(target_i - d_i): brings a fraction over d to the denominator target.
  Poly cofactor(const DenExps& target, const DenExps& d) const;

  std::string factor_string(int i) const;

 private:
  struct Factor {
    std::vector<int> c;
    Kind kind;
    Poly poly;
    std::vector<Poly> derivs;
    int lead;  // first nonzero index of c
  };
  bool divide_geometric(const Poly& num, const Factor& f, Poly& q) const;
  bool divide_affine(const Poly& num, const Factor& f, Poly& q) const;

  Model model_;
  int nvars_;
  VarNames names_;
  std::vector<Factor> factors_;
};

/// Rational function num / prod F_i^{e_i} over a FactorBasis. After any public
/// operation the representation is reduced: no F_i with e_i > 0 divides num,
/// and zero has an empty denominator. The basis must outlive the value.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(const FactorBasis* basis) : basis_(basis) {}
  RatFun(const FactorBasis* basis, Poly num) : basis_(basis), num_(std::move(num)) {}
  RatFun(const FactorBasis* basis, const Scalar& c) : basis_(basis), num_(c) {}
  /// num / den, reduced.
  static RatFun make(const FactorBasis* basis, Poly num, DenExps den);
  /// Same without reduction; caller guarantees the result is reduced.
  static RatFun make_reduced(const FactorBasis* basis, Poly num, DenExps den);

  /// (zeta^c - 1)^(-power) for kind 1, (zeta^c + 1)^(-power) for kind 2;
  /// c is any nonzero lattice vector whose content is 1, 2 or 4.
  static RatFun inverse_binomial(const FactorBasis* basis, const std::vector<int>& c, int kind, int power);
  /// (sum c_t X_t)^(-power) in the affine model.
  static RatFun inverse_linear(const FactorBasis* basis, const std::vector<int>& c, int power);

  const FactorBasis* basis() const { return basis_; }
  const Poly& num() const { return num_; }
  const DenExps& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// True when the value is an element of Q(params).
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Scalar constant_value() const { return num_.constant_term(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator*(const Scalar& s) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  /// Product without the final reduction (for accumulation).
  RatFun mul_raw(const RatFun& o) const;

  /// Derivation along variable t (Euler or partial per model), reduced.
  RatFun derive(int t) const;

  /// zeta -> zeta^2 (geometric model only).
  RatFun doubled() const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  RatFun substitute_params(const std::map<int, Scalar>& values) const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  std::string str() const;

 private:
  friend class RatSum;
  void reduce();

  const FactorBasis* basis_ = nullptr;
  Poly num_;
  DenExps den_;
};

/// Accumulates many (unreduced) terms, grouping numerators by denominator.
/// result() reduces the groups and adds them pairwise.
class RatSum {
 public:
  explicit RatSum(const FactorBasis* basis) : basis_(basis) {}
  void add(const RatFun& f);
  void add(const RatFun& f, const Scalar& scale);
  void merge(const RatSum& o);
  /// Adds f * s and a * b term by term, without reducing.
  void add_product(const RatFun& f, const RatSum& s);
  void add_product(const RatSum& a, const RatSum& b);
  /// Term-wise derivative along variable t.
  RatSum derive(int t) const;
  bool empty() const { return buckets_.empty(); }
  RatFun result() const;

 private:
  const FactorBasis* basis_;
  std::map<DenExps, Poly> buckets_;
};

}  // namespace cms
