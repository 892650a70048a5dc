#include "cms/params.hpp"

#include <stdexcept>

namespace cms {

const VarNames& param_names() {
  static const VarNames names = {"k", "p", "q", "t", "l1", "l2", "l3", "theta"};
  return names;
}

const std::string& param_name(int index) {
  if (index < 0 || index >= kParamCount) throw std::out_of_range("parameter index");
  return param_names()[index];
}

int param_index(const std::string& name) {
  const auto& names = param_names();
  for (int i = 0; i < kParamCount; ++i)
    if (names[i] == name) return i;
  return -1;
}

}  // namespace cms
