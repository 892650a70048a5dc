#include "cms/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cms {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; j < (*this)[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > j) ++count;
    c.push_back(count);
  }
  return Partition(c);
}

bool Partition::dominated_by(const Partition& o) const {
  int a = 0, b = 0;
  int len = std::max(length(), o.length());
  for (int i = 0; i < len; ++i) {
    a += (*this)[i];
    b += o[i];
    if (a > b) return false;
  }
  return true;
}

bool Partition::in_fat_hook(int n, int m) const { return (*this)[n] <= m; }

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition: " + s);
    parts.push_back(v);
  }
  return Partition(parts);
}

std::vector<Partition> partitions_bounded(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(left, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions(int n) { return partitions_bounded(n, n, n); }

std::vector<Partition> fat_hook_partitions(int n_, int m_, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions(n))
    if (p.in_fat_hook(n_, m_)) out.push_back(p);
  return out;
}

}  // namespace cms
