#pragma once

#include <string>

namespace cms::testing {

struct PropertyResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
};

/// Commutativity, associativity, distributivity, additive and
/// multiplicative inverses for Scalar, Poly and RatFun triples.
PropertyResult ring_axioms(int instances, unsigned seed);
/// Building a Scalar or RatFun from an already canonical pair, or from a
/// pair sharing a common factor, gives back the same canonical value.
PropertyResult normalization_idempotence(int instances, unsigned seed);
/// nullspace_dim + rank = columns, every nullspace vector is a solution,
/// and the rank respects the construction bound.
PropertyResult nullity_rank(int instances, unsigned seed);

/// Sequential substitution of independent bindings equals simultaneous
/// composition.
PropertyResult substitution_composes(int instances, unsigned seed);
/// (AB)C = A(BC) and the Jacobi identity for random small operators.
PropertyResult operator_algebra(int instances, unsigned seed);
/// conjugate(conjugate(lambda)) = lambda and weight preservation.
PropertyResult partition_involution(int instances, unsigned seed);

}  // namespace cms::testing
