#pragma once

#include <map>
#include <string>
#include <vector>

#include "cms/scalar.hpp"

namespace cms {

/// Coefficients of difference operators are Scalars in q (slot kParamQ),
/// t (slot kParamT) and the coordinates x_1..x_n, y_1..y_m, which occupy
/// slots kCoordSlot, kCoordSlot + 1, ... in that order.
inline constexpr int kCoordSlot = 4;
inline constexpr int kMaxCoords = kMaxVars - kCoordSlot;

/// Slot of x_i (i = 0..n-1) or y_j (n + j).
int coord_slot(int index);
Scalar coord(int index);
/// Names for rendering: q, t, x1.., y1.. at their slots.
VarNames difference_names(int n, int m);
std::string render_rational(const Scalar& s, const VarNames& names);

/// Multiplicative shift: coordinate a is scaled by q^qexp[a] t^texp[a].
struct Shift {
  std::vector<int> qexp, texp;
  friend bool operator<(const Shift& a, const Shift& b) {
    return a.qexp != b.qexp ? a.qexp < b.qexp : a.texp < b.texp;
  }
  friend bool operator==(const Shift& a, const Shift& b) { return a.qexp == b.qexp && a.texp == b.texp; }
};

/// sum_s c_s(x, y; q, t) T_s, zero coefficients dropped.
class ShiftOp {
 public:
  ShiftOp(int n, int m) : n_(n), m_(m) {}

  int n() const { return n_; }
  int m() const { return m_; }
  int coords() const { return n_ + m_; }
  const std::map<Shift, Scalar>& terms() const { return terms_; }

  void add_term(const Shift& s, const Scalar& c);
  /// Shift of coordinate a by q (or t when `by_t`).
  Shift single(int a, bool by_t) const;

  /// (D f)(x, y) for f a rational function in the coordinates.
  Scalar apply(const Scalar& f) const;

  friend bool operator==(const ShiftOp& a, const ShiftOp& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int n_, m_;
  std::map<Shift, Scalar> terms_;
};

/// D^{n,m} = 1/(1-q) sum A_i T_{q,x_i} + 1/(1-t) sum B_j T_{t,y_j} with
///   A_i = prod_{k != i} (x_i - t x_k)/(x_i - x_k) prod_j (x_i - q y_j)/(x_i - y_j),
///   B_j = prod_i (y_j - t x_i)/(y_j - x_i) prod_{l != j} (y_j - q y_l)/(y_j - y_l).
ShiftOp build_deformed_mr(int n, int m);

/// Macdonald's first operator sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i}.
ShiftOp macdonald_operator(int n);

/// Swaps q <-> t and the x and y blocks: an operator on (n, m) coordinates
/// becomes one on (m, n) coordinates.
ShiftOp dual(const ShiftOp& d);
/// dual(D^{n,m}) == D^{m,n}.
bool duality_check(int n, int m);

/// Expands sum_{v in O} 1/(1 - q^{(v,v)}) prod_{<a,v> > 0} (1 - t_a^{(a,v)} q^{-a})/(1 - q^{-a}) T_v
/// over the A-type system with blocks (n, m), with t_a = q^{m_a}, and
/// t = q^k, x_i = q^{e_i}, y_j = q^{e_{n+j}}. Every exponent must reduce to
/// c0 + c1 k with integer c0, c1, which becomes q^c0 t^c1. The sign of
/// <a, v> is read at a generic positive k.
ShiftOp root_system_form(int n, int m);
bool rootsystem_form_check(int n, int m);

/// D^{n,0} against Macdonald's operator: the coefficient of T_{q,x_i} in
/// (1-q) D^{n,0} equals Macdonald's coefficient with x -> 1/x, and
/// t^{n-1} times Macdonald's coefficient at t -> 1/t.
struct ReductionCheck {
  bool inverted_coordinates = false;
  bool inverted_t = false;
};
ReductionCheck classical_reduction_check(int n);

/// Coefficient c making D^{n,m}(sum x_i + c sum y_j) a polynomial, found
/// from the residue on x_1 = y_1, together with whether the image is then
/// polynomial. Needs n, m >= 1.
struct P1Analogue {
  Scalar coefficient;
  bool polynomial_image = false;
  Scalar image;
};
P1Analogue deformed_p1_analogue(int n, int m);

/// q = e^h, t = e^{kh} applied to the eigenvalue of D^{n,m} on x^a y^b:
/// D(x^a y^b) = S(a, b) x^a y^b. Records the Laurent coefficients of S in h
/// and whether the quadratic part in (a, b) of the h^1 coefficient is
/// -1/2 (sum a_i^2 + k sum b_j^2), the symbol of the deformed Laplacian in
/// logarithmic coordinates. Coordinates sit at slots kCoordSlot.., the
/// exponents a_i, b_j at slots 1, 2, 3 and k at slot kParamK, so n + m <= 3.
struct DifferentialLimit {
  std::vector<Scalar> coefficients;  // h^-1, h^0, h^1
  Scalar quadratic_part;
  bool laplacian_symbol = false;
  VarNames names;
};
DifferentialLimit differential_limit(int n, int m);

}  // namespace cms
