#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cms/linalg.hpp"
#include "cms/ratfun.hpp"

namespace cms {

enum class Family { A, BC, B, C, C0, D, AB13, G12, D21 };

const char* family_name(Family f);
/// Parses "A", "BC", ..., "D21"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& s);
bool is_classical(Family f);

/// Vector in ambient coordinates.
using GVec = std::vector<Scalar>;

struct Root {
  GVec v;                    // ambient coordinates
  std::vector<int> lattice;  // coordinates in the lattice basis
  bool imaginary = false;
  bool positive = false;
  Scalar mult;
};

/// Which bilinear form a pairing or reflection uses.
enum class Form { Deformed, Euclidean, Original };

/// A generalized root system with an admissible deformation: deformed form
/// B, multiplicities, and an integral basis of the root lattice.
class GRS {
 public:
  Family family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int dim() const { return dim_; }
  /// Human-readable descriptor such as "A(2,1)" (block sizes) or "G12".
  std::string label() const;

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<int> positive_roots() const;
  /// Index of the root equal to v, or -1.
  int find_root(const GVec& v) const;
  /// Multiplicity of v, zero when v is not a root.
  Scalar multiplicity(const GVec& v) const;

  const Matrix& form(Form f) const;
  Scalar pairing(const GVec& u, const GVec& v, Form f = Form::Deformed) const;
  /// v - 2 (a, v) / (a, a) a; throws for isotropic a.
  GVec reflect(const GVec& a, const GVec& v, Form f) const;

  /// Lattice basis b_1..b_d in ambient coordinates.
  const std::vector<GVec>& lattice_basis() const { return basis_; }
  /// Integer coordinates of v in the lattice basis; throws if v is not in
  /// the lattice.
  std::vector<int> lattice_coords(const GVec& v) const;

  /// rho(m) = sum over positive roots of m_a * a.
  GVec rho() const;
  /// {e_i} for A, {+-e_i} for BC-type families; throws for exceptional ones.
  std::vector<GVec> homogeneous_orbit() const;
  /// Parameters occurring in B and the multiplicities.
  std::vector<int> parameters() const { return params_; }

  /// Factor basis containing every root direction (geometric and affine).
  const FactorBasis* factor_basis(Model model) const {
    return model == Model::Geometric ? geo_.get() : aff_.get();
  }

  /// Copy with every multiplicity and form entry specialized.
  std::shared_ptr<GRS> specialize(const std::map<int, Scalar>& values) const;
  /// Copy with the multiplicity of the W0-orbit of root `index` replaced
  /// (the same value on the whole orbit and its negatives).
  std::shared_ptr<GRS> with_multiplicity(int index, const Scalar& value) const;

 private:
  friend std::shared_ptr<GRS> build_system(Family, int, int);
  void finish();

  Family family_ = Family::A;
  int n_ = 0, m_ = 0, dim_ = 0;
  std::vector<Root> roots_;
  Matrix b_{0, 0}, b0_{0, 0}, eu_{0, 0};
  std::vector<GVec> basis_;
  Matrix basis_inv_{0, 0};
  std::vector<int> params_;
  std::shared_ptr<FactorBasis> geo_, aff_;
};

/// Builds the deformed system. For A and BC-type families n, m are the
/// sizes of the two blocks of coordinates (so A with n=2, m=1 has the six
/// roots e_i - e_j on three coordinates); exceptional families ignore them.
std::shared_ptr<GRS> build_system(Family family, int n = 0, int m = 0);

std::string to_string(const GVec& v);

}  // namespace cms
