#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cms/diffop.hpp"

namespace cms {

/// Outcome of an exact identity check; residue is empty when it holds.
struct IdentityResult {
  bool holds = true;
  std::string residue;
};

/// Checks sum_{a, b > 0, a not proportional to b} m_a m_b (a,b) (F_a F_b - c) == 0
/// with F = coth((a,x)), c = 1 in the geometric model and F = 1/(a,x), c = 0
/// in the affine model.
IdentityResult main_identity(const GRS& g, Model model);
/// The left side of main_identity as a function.
RatFun main_identity_sum(const GRS& g, Model model);

/// The operators d_v^(p) and L_p = sum_{v in O} d_v^(p) / (v,v) for a
/// classical system, built from the recurrence
///   d_v^(p) = d_v d_v^(p-1) - sum_{a>0} m_a (a,v) f_a (d_v^(p-1) - d_{s_a v}^(p-1))
/// with s_a the Euclidean reflection. Levels are memoized; the object may
/// be shared between threads.
class IntegralFamily {
 public:
  IntegralFamily(std::shared_ptr<const GRS> g, Model model);

  const GRS& system() const { return *g_; }
  Model model() const { return model_; }
  const std::vector<GVec>& orbit() const { return orbit_; }
  int orbit_index(const GVec& v) const;

  const EulerOp& nabla(int v, int p);
  const EulerOp& integral(int p);

  /// [H, d_v^(p)] - (v,v) sum_{a>0} m_a <a,a>/<v,v> phi_a (d_v^(p) - d_{s_a v}^(p))
  /// with H = Laplacian - 2 sum_{a>0} m_a f_a d_a (L_2 for A, L_2 / 2 for BC).
  EulerOp commutator_relation_defect(int v, int p);
  EulerOp commutator(int p, int q);

  /// Number of algebraically independent top-order symbols among
  /// L_1..L_pmax, via the rank of their Jacobian at a fixed rational point.
  int independent_symbols(const std::vector<int>& ps);
  /// Top-order symbol of L_p as a polynomial in xi_1..xi_d.
  Poly top_symbol(int p);

 private:
  void fill(int p);

  struct PositiveRoot {
    Scalar mult;
    std::vector<Scalar> pair_v;  // (a, v) for v in the orbit
    std::vector<int> reflect;    // index of s_a v
    Scalar euclid_norm;          // <a, a>
    RatFun f, phi;
    GVec v;
  };

  std::shared_ptr<const GRS> g_;
  Model model_;
  const FactorBasis* basis_;
  std::vector<GVec> orbit_;
  std::vector<Scalar> orbit_norm_;    // (v, v)
  std::vector<Scalar> orbit_euclid_;  // <v, v>
  std::vector<EulerOp> d_;            // d_v
  std::vector<PositiveRoot> roots_;
  std::vector<std::vector<EulerOp>> levels_;  // levels_[p-1][v]
  std::map<int, EulerOp> integrals_;
  std::recursive_mutex mutex_;
};

}  // namespace cms
