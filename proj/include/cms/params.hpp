#pragma once

#include <string>
#include <vector>

namespace cms {

// Slots of the global parameter ring. Every Scalar is a rational function in
// (a subset of) these indeterminates.
enum Param : int {
  kParamK = 0,
  kParamP = 1,
  kParamQ = 2,
  kParamT = 3,
  kParamL1 = 4,
  kParamL2 = 5,
  kParamL3 = 6,
  kParamTheta = 7,
  kParamCount = 8
};

const std::string& param_name(int index);
/// Returns the slot for a name such as "k" or "l2", or -1.
int param_index(const std::string& name);

/// Variable names used when rendering polynomials in some other ring.
using VarNames = std::vector<std::string>;
const VarNames& param_names();

}  // namespace cms
