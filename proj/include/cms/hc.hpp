#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cms/integrals.hpp"
#include "cms/poly.hpp"

namespace cms {

/// Names "λ1", ..., "λd" for polynomials on weight space.
VarNames lambda_names(int d);

/// (λ, v) under the deformed form, as a linear polynomial in λ_1..λ_d
/// (ambient coordinates of λ).
Poly lambda_pairing(const GRS& g, const GVec& v);

/// Harish-Chandra images of the integrals of a classical system, from
///   y_v^(p) = (λ,v) y_v^(p-1) + 1/2 sum_{a>0} m_a (a,v) y_{s_a v}^(p-1),  y^(0) = 1,
/// and Z_p = sum_{v in O} y_v^(p) / (v,v).
class HCFamily {
 public:
  explicit HCFamily(std::shared_ptr<const GRS> g);

  const GRS& system() const { return *g_; }
  const std::vector<GVec>& orbit() const { return orbit_; }
  const Poly& y(int v, int p);
  Poly image(int p);

 private:
  std::shared_ptr<const GRS> g_;
  std::vector<GVec> orbit_;
  std::vector<Poly> pair_v_;
  std::vector<Scalar> norm_;
  // For each orbit vector: (coefficient 1/2 m_a (a,v), index of s_a v).
  std::vector<std::vector<std::pair<Scalar, int>>> links_;
  std::vector<std::vector<Poly>> levels_;  // levels_[p][v]
  std::mutex mutex_;
};

/// Shift used with the operator-side homomorphism: half of rho(m).
GVec hc_rho(const GRS& g);

/// The constant-coefficient part of L_p (all coefficients taken at the limit
/// e^{-a} -> 0 for a > 0) acting on e^{(λ,x)}, evaluated at λ + shift.
Poly operator_image(IntegralFamily& fam, int p, const GVec& shift);

/// P(λ + γ/2) - P(λ - γ/2) vanishes on (γ, λ) = 0 for every positive
/// imaginary root γ. On failure `witness` names the root and the residue.
bool quasi_invariant(const GRS& g, const Poly& P, std::string* witness = nullptr);
/// Rational analogue: d_γ P vanishes on (γ, λ) = 0 for imaginary γ.
bool quasi_invariant_rational(const GRS& g, const Poly& P, std::string* witness = nullptr);
/// Invariance under the deformed reflections in the real roots.
bool w0_invariant(const GRS& g, const Poly& P, std::string* witness = nullptr);

/// Restriction of P to the hyperplane (γ, λ) = 0 (one coordinate eliminated).
Poly restrict_to_hyperplane(const GRS& g, const Poly& P, const GVec& gamma);

/// λ_1^r + ... + λ_n^r + k^{r-1} (λ_{n+1}^r + ... + λ_{n+m}^r).
Poly power_sum_top(const GRS& g, int r);

/// Bernoulli polynomial B_r(x) in variable 0.
Poly bernoulli_polynomial(int r);
/// Y_r = sum_i B_r(λ_i + 1/2) + k^{r-1} sum_j B_r(λ_{n+j} + 1/2) for A systems.
Poly bernoulli_generator(const GRS& g, int r);

/// Coefficients c_mu with target = sum_mu c_mu prod_i gens[mu_i - 1] over
/// all partitions mu with |mu| <= max_weight (mu = () is the constant 1);
/// nullopt when target is not in that span.
std::optional<std::vector<Scalar>> express_in_generators(const Poly& target, const std::vector<Poly>& gens,
                                                         int max_weight);

}  // namespace cms
