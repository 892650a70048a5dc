#pragma once

#include <map>
#include <string>
#include <vector>

#include "cms/ratfun.hpp"
#include "cms/rootsys.hpp"

namespace cms {

/// Differential operator sum_I a_I D^I in normal form (coefficients to the
/// left). D_t is the Euler derivation in the geometric model and the partial
/// derivative in the affine model; the multi-index I is stored as a Monomial.
class EulerOp {
 public:
  using Terms = std::map<Monomial, RatFun>;

  EulerOp() = default;
  explicit EulerOp(const FactorBasis* basis) : basis_(basis) {}

  static EulerOp identity(const FactorBasis* basis);
  static EulerOp multiplication(const RatFun& f);
  static EulerOp derivation(const FactorBasis* basis, int t);

  const FactorBasis* basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  /// Coefficient of D^I (zero if absent).
  RatFun coefficient(const Monomial& index) const;

  /// Adds c * D^I.
  void add_term(const Monomial& index, const RatFun& c);

  EulerOp operator+(const EulerOp& o) const;
  EulerOp operator-(const EulerOp& o) const;
  EulerOp operator-() const;
  EulerOp operator*(const Scalar& s) const;
  /// Left multiplication by a function.
  EulerOp left_multiply(const RatFun& f) const;
  EulerOp& operator+=(const EulerOp& o) { return *this = *this + o; }
  EulerOp& operator-=(const EulerOp& o) { return *this = *this - o; }

  /// Operator product this * o.
  EulerOp compose(const EulerOp& o) const;
  /// this * o - o * this.
  EulerOp commutator(const EulerOp& o) const;
  /// Applies the operator to a function.
  RatFun apply(const RatFun& f) const;

  /// Rescaling x -> 2x in the geometric model: zeta -> zeta^2 in the
  /// coefficients and D_t -> D_t / 2.
  EulerOp doubled() const;
  EulerOp substitute_params(const std::map<int, Scalar>& values) const;

  friend bool operator==(const EulerOp& a, const EulerOp& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EulerOp& a, const EulerOp& b) { return !(a == b); }

  /// One line per term, sorted by multi-index: "D[i1,i2,...]: coefficient".
  std::string str() const;

 private:
  const FactorBasis* basis_ = nullptr;
  Terms terms_;
};

/// Coefficient conventions for the operators built from a root system.
/// Full: potentials 1/sinh^2((a,x)), drift coth((a,x)); Half: the same in
/// (a,x)/2, i.e. the functions f_a and phi_a used by the recurrence.
enum class Normalization { Full, Half };

/// Coefficient functions of a root with lattice vector c.
/// f = 1/2 coth((a,x)/2) (geometric) or 1/(a,x) (affine).
RatFun half_f(const FactorBasis* basis, const std::vector<int>& c);
/// phi = 1/4 - f^2 (geometric) or -1/(a,x)^2 (affine).
RatFun half_phi(const FactorBasis* basis, const std::vector<int>& c);
/// coth((a,x)) (geometric) or 1/(a,x) (affine).
RatFun full_coth(const FactorBasis* basis, const std::vector<int>& c);
/// 1/sinh^2((a,x)) (geometric) or 1/(a,x)^2 (affine).
RatFun full_inv_sinh2(const FactorBasis* basis, const std::vector<int>& c);

/// d_v = sum_t (b_t, v) D_t with the deformed pairing.
EulerOp directional(const GRS& g, const GVec& v, Model model);
/// Laplacian of the deformed form: sum_{t,s} (b_t, b_s) D_t D_s.
EulerOp laplacian(const GRS& g, Model model);

/// -Laplacian + sum_{a>0} m_a (m_a + 2 m_2a + 1) (a,a) V_a with V_a the
/// inverse square sinh (hyperbolic form) or 1/(a,x)^2 (affine).
EulerOp build_schrodinger(const GRS& g, Model model, Normalization norm = Normalization::Full);
/// -Laplacian + 2 sum_{a>0} m_a F_a d_a with F_a the coth-type drift.
EulerOp build_radial(const GRS& g, Model model, Normalization norm = Normalization::Full);
/// D_t log psi0 for psi0 = prod sinh^{-m_a} (or prod (a,x)^{-m_a}).
std::vector<RatFun> log_derivative_psi0(const GRS& g, Model model, Normalization norm = Normalization::Full);
/// psi0^{-1} A psi0, computed by substituting D_t -> D_t + w_t.
EulerOp conjugate_by_psi0(const GRS& g, const EulerOp& a, Model model, Normalization norm = Normalization::Full);

/// |rho(m)|^2 under the deformed form.
Scalar rho_norm_squared(const GRS& g);

}  // namespace cms
