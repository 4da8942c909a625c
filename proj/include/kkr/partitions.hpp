#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace kkr {

/// Visits every partition of size (parts weakly decreasing, each <= max_part)
/// in reverse lexicographic order.  The empty partition is visited for size 0.
template <class F>
void for_each_partition(int size, int max_part, F&& visit) {
  std::vector<int> parts;
  auto rec = [&](auto& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      visit(static_cast<const std::vector<int>&>(parts));
      return;
    }
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, size, max_part);
}

template <class F>
void for_each_partition(int size, F&& visit) {
  for_each_partition(size, size, std::forward<F>(visit));
}

inline std::vector<std::vector<int>> partitions(int size) {
  std::vector<std::vector<int>> out;
  for_each_partition(size, [&](const std::vector<int>& p) { out.push_back(p); });
  return out;
}

/// Visits every weakly increasing sequence of the given length with entries
/// in [lo, hi].
template <class F>
void for_each_weakly_increasing(int length, int lo, int hi, F&& visit) {
  std::vector<int> seq;
  auto rec = [&](auto& self, int from) -> void {
    if (static_cast<int>(seq.size()) == length) {
      visit(static_cast<const std::vector<int>&>(seq));
      return;
    }
    for (int v = from; v <= hi; ++v) {
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  rec(rec, lo);
}

}  // namespace kkr
