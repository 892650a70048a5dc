#pragma once

#include <map>
#include <string>
#include <vector>

#include "cms/render.hpp"
#include "cms/scalar.hpp"

namespace cms {

/// Polynomial (or Laurent polynomial) with coefficients in Q(params).
using Poly = Polynomial<Scalar>;

/// Value at a point; negative exponents are allowed when the coordinate is
/// nonzero.
Scalar evaluate(const Poly& p, const std::vector<Scalar>& point);

/// Substitutes the polynomial `value` for variable `var` (nonnegative
/// exponents only in that variable).
Poly substitute(const Poly& p, int var, const Poly& value);

/// Simultaneous substitution x_i -> images[i] for i < images.size()
/// (nonnegative exponents only).
Poly compose(const Poly& p, const std::vector<Poly>& images);

/// Sum of the terms of total degree d.
Poly homogeneous_part(const Poly& p, int d);

/// Applies a parameter substitution to every coefficient.
Poly substitute_params(const Poly& p, const std::map<int, Scalar>& values);

/// Maps exponent vectors through `f` (used for relabelling and doubling).
template <class F>
Poly map_monomials(const Poly& p, F f) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) ts.emplace_back(f(m), c);
  return Poly::from_terms(std::move(ts));
}

/// Names "<prefix>1", ..., "<prefix>n".
VarNames indexed_names(const std::string& prefix, int n);

inline std::string to_string(const Poly& p, const VarNames& names) { return render(p, names); }

}  // namespace cms
