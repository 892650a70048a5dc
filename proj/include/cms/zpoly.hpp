#pragma once

#include <string>

#include "cms/polynomial.hpp"

namespace cms {

/// Polynomial with arbitrary-precision integer coefficients in the parameter
/// slots; numerators and denominators of Scalar values.
using ZPoly = Polynomial<mpz_class>;

/// gcd of the integer coefficients (0 for the zero polynomial).
mpz_class integer_content(const ZPoly& p);

/// Multivariate gcd over Z, normalized so the lex-leading coefficient is
/// positive. gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Exact division. Returns false (leaving q unspecified) when b does not
/// divide a.
bool try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q);
/// Exact division; throws std::domain_error when b does not divide a.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);

/// Substitutes `value` for variable `var`.
ZPoly substitute(const ZPoly& p, int var, const ZPoly& value);

std::string to_string(const ZPoly& p);

}  // namespace cms
