#pragma once

#include <functional>
#include <vector>

namespace cms::oracle {

/// Every partition of n as a weakly decreasing vector, by plain recursion
/// on the largest part.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Number of partitions of N whose (n+1)-th part is at most m.
inline long hook_count(int n, int m, int N) {
  long c = 0;
  for (const auto& p : all_partitions(N))
    if (static_cast<int>(p.size()) <= n || p[n] <= m) ++c;
  return c;
}

}  // namespace cms::oracle
