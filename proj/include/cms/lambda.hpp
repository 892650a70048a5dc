#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cms/partition.hpp"
#include "cms/symfun.hpp"

namespace cms {

/// Polynomials in x_1..x_n, y_1..y_m: x_i is variable i-1, y_j is n+j-1.
VarNames super_names(int n, int m);

/// p_r(x, y, k) = sum x_i^r + (1/k) sum y_j^r.
Poly newton_deformed(int n, int m, int r);

/// Symmetric in the x block and in the y block separately.
bool block_symmetric(const Poly& f, int n, int m);
/// Block symmetry plus (d/dx_1 - k d/dy_1) f = 0 on x_1 = y_1.
bool lambda0_member(const Poly& f, int n, int m, std::string* witness = nullptr);
/// BC version: f is even in every variable and its restriction condition
/// holds on both x_1 = y_1 and x_1 = -y_1.
bool lambda0_member_bc(const Poly& f, int n, int m, std::string* witness = nullptr);

/// Number of partitions of N inside the fat (n,m)-hook.
long hook_count(int n, int m, int N);
/// Coefficients of t^0..t^nmax of the closed form
/// 1/prod_{i<=n}(1-t^i) * [1 + sum_{i=1}^m t^{i(n+1)} / prod_{j<=i}(1-t^j)].
std::vector<mpz_class> poincare_closed_form(int n, int m, int nmax);
/// The same series with t replaced by t^2.
std::vector<mpz_class> poincare_closed_form_bc(int n, int m, int nmax);
/// Numerator of the closed form for m = 1 times prod_{i<=n+1}(1-t^i).
std::vector<mpz_class> poincare_numerator_m1(int n);

/// Dimension of the degree-N component of Lambda^0_{n,m;k}, computed as the
/// nullity of the restriction conditions on block-symmetric polynomials.
/// With `k_value` the parameter is pinned; otherwise k stays symbolic.
int component_dimension(int n, int m, int N, const std::optional<Scalar>& k_value = std::nullopt);
/// BC analogue: polynomials even in every variable, conditions on x_1 = +-y_1.
int component_dimension_bc(int n, int m, int N, const std::optional<Scalar>& k_value = std::nullopt);
/// Rank of the products p_mu(x, y, k), |mu| = N, optionally at a pinned k.
int newton_span_rank(int n, int m, int N, const std::optional<Scalar>& k_value = std::nullopt);

/// phi(P_lambda(z, theta)) at theta = -k: the Jack polynomial with
/// p_r -> p_r(x, y, k).
Poly super_jack(const Partition& lambda, int n, int m);
/// Apply p_r -> p_r(x, y, k) to a symmetric function (theta set to -k).
Poly deformed_image(const SymFun& f, int n, int m);
/// x^lambda_1..x^lambda_n y_1^<lambda'_1 - n> ... y_m^<lambda'_m - n>.
Monomial expected_leading_monomial(const Partition& lambda, int n, int m);
/// Rank of the coefficient vectors of a family of polynomials.
int polynomial_rank(const std::vector<Poly>& polys);

/// Nontrivial solution family of p_1 = ... = p_{n+m} = 0 at k = -s/r:
/// x_1 = ... = x_r = z = y_1 = ... = y_s, other coordinates zero.
struct ZeroSetInstance {
  int r = 0, s = 0;
  bool found = false;  // some 1 <= r <= n, 1 <= s <= m has s/r = -k
  bool solves = false;
  std::vector<std::string> residues;
};
ZeroSetInstance power_sum_zero_instance(int n, int m, const Scalar& k);
/// For n = m = 1 and symbolic k: eliminate y with p_1 = 0 and return the
/// remaining coefficient c(k) with p_2 = c(k) x^2.
Scalar generic_elimination_coefficient();

}  // namespace cms
