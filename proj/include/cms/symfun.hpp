#pragma once

#include <map>
#include <vector>

#include "cms/partition.hpp"
#include "cms/poly.hpp"

namespace cms {

/// Symmetric functions are stored in the power-sum basis as polynomials in
/// p_1..p_N: variable r-1 stands for p_r, so p_mu is a monomial.
using SymFun = Poly;

VarNames power_sum_names(int n);
Monomial power_sum_monomial(const Partition& mu);
Partition monomial_partition(const Monomial& m);

/// m_mu(x_1..x_n); zero when mu has more than n parts.
Poly monomial_symmetric(const Partition& mu, int nvars);
/// p_r(x_1..x_n).
Poly power_sum(int r, int nvars);

/// Coefficients of m_mu in a symmetric polynomial, read off the monomials
/// x^mu with mu a partition.
std::map<Partition, Scalar> monomial_expansion(const Poly& f);

/// Rewrites sum c_mu m_mu (all mu of weight `degree`) in power sums.
SymFun monomial_to_power_sums(const std::map<Partition, Scalar>& coeffs, int degree);

/// Jack polynomial P_lambda with parameter alpha, as coefficients on m_mu.
/// Computed as the eigenvector of
///   D(alpha) = alpha/2 sum x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i
/// in |lambda| variables that is unitriangular in the dominance order;
/// throws if the solve hits a zero pivot or leaves the dominance cone.
std::map<Partition, Scalar> jack_monomial(const Partition& lambda, const Scalar& alpha);

/// P_lambda(z, theta) in power sums, with alpha = 1/theta and theta the
/// symbolic parameter "theta".
SymFun jack_polynomial(const Partition& lambda);

}  // namespace cms
