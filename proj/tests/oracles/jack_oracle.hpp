#pragma once

#include <map>
#include <vector>

#include "cms/scalar.hpp"

namespace cms::oracle {

/// Jack P_lambda by Gram-Schmidt: monomial symmetric functions in
/// lexicographic order, orthogonalized for
///   <p_rho, p_sigma> = delta z_rho alpha^{l(rho)},  alpha = 1/theta,
/// with theta the symbolic parameter. Returns the power-sum coefficients,
/// keyed by rho (weakly decreasing parts). Intended for |lambda| <= 4.
std::map<std::vector<int>, Scalar> jack_power_sums(const std::vector<int>& lambda);

}  // namespace cms::oracle
