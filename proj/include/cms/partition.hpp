#pragma once

#include <string>
#include <vector>

namespace cms {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// i-th part (0-based), zero past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  Partition conjugate() const;
  /// Dominance order: partial sums of *this never exceed those of o.
  bool dominated_by(const Partition& o) const;
  /// lambda_{n+1} <= m.
  bool in_fat_hook(int n, int m) const;

  /// "3,1,1"; the empty partition is "()".
  std::string str() const;
  /// Parses "3,1,1" (order of parts is irrelevant).
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Reverse lexicographic order: (3) before (2,1) before (1,1,1).
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions(int n);
/// Partitions of n with at most `max_parts` parts, each at most `max_part`.
std::vector<Partition> partitions_bounded(int n, int max_parts, int max_part);
/// Partitions of n inside the fat (n_, m_)-hook.
std::vector<Partition> fat_hook_partitions(int n_, int m_, int n);

/// max(0, x).
inline int positive_part(int x) { return x > 0 ? x : 0; }

}  // namespace cms
