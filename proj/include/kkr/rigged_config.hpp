#pragma once

// Rigged configurations of type A^{(1)}_n.
//
// A rigged configuration is mu^{(0)} (the shape of the path) together with
// pairs (mu^{(a)}, J^{(a)}) for a = 1..n.  Vacancy numbers
//
//   p^{(a)}_j = E^{(a-1)}_j - 2 E^{(a)}_j + E^{(a+1)}_j,
//   E^{(a)}_j = sum_i min(j, mu^{(a)}_i),       E^{(n+1)}_j = 0,
//
// are derived on demand.  Validity requires, for each level a and each row
// length j, that the riggings of the length-j rows (in row order) are weakly
// increasing, nonnegative and at most p^{(a)}_j.
//
// By default levels are kept as partitions with the riggings of equal-length
// rows sorted increasingly.  In composition mode the row order given by the
// caller is preserved.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kkr/error.hpp"
#include "kkr/partitions.hpp"

namespace kkr {

struct RiggedLevel {
  std::vector<int> mu;
  std::vector<int> riggings;

  auto operator<=>(const RiggedLevel&) const = default;
  bool operator==(const RiggedLevel&) const = default;
};

class RiggedConfiguration {
 public:
  RiggedConfiguration(int rank, std::vector<int> mu0,
                      std::vector<RiggedLevel> levels, bool composition = false)
      : rank_(rank),
        composition_(composition),
        mu0_(std::move(mu0)),
        levels_(std::move(levels)) {
    if (rank_ < 1) throw invalid_rc("rank must be at least 1");
    if (levels_.size() != static_cast<std::size_t>(rank_))
      throw invalid_rc("expected " + std::to_string(rank_) + " levels, got " +
                       std::to_string(levels_.size()));
    for (int part : mu0_)
      if (part < 1) throw invalid_rc("mu0 parts must be positive");
    for (std::size_t a = 0; a < levels_.size(); ++a) {
      auto& lv = levels_[a];
      if (lv.mu.size() != lv.riggings.size())
        throw invalid_rc("level " + std::to_string(a + 1) +
                         ": one rigging per row is required");
      for (int part : lv.mu)
        if (part < 1)
          throw invalid_rc("level " + std::to_string(a + 1) +
                           ": row lengths must be positive");
      if (!composition_) canonicalize(lv);
    }
  }

  /// The configuration with every level empty (the vacuum path's RC).
  static RiggedConfiguration vacuum(int rank, std::vector<int> mu0) {
    return RiggedConfiguration(
        rank, std::move(mu0),
        std::vector<RiggedLevel>(static_cast<std::size_t>(rank)));
  }

  int rank() const noexcept { return rank_; }
  bool composition() const noexcept { return composition_; }
  const std::vector<int>& mu0() const noexcept { return mu0_; }
  const std::vector<RiggedLevel>& levels() const noexcept { return levels_; }

  /// (mu^{(a)}, J^{(a)}) for 1 <= a <= n.
  const RiggedLevel& level(int a) const {
    if (a < 1 || a > rank_)
      throw precondition_error("level index " + std::to_string(a) +
                               " outside 1.." + std::to_string(rank_));
    return levels_[static_cast<std::size_t>(a - 1)];
  }

  /// mu^{(a)} for 0 <= a <= n + 1 (mu^{(n+1)} is empty).
  const std::vector<int>& shape(int a) const {
    static const std::vector<int> empty;
    if (a == 0) return mu0_;
    if (a == rank_ + 1) return empty;
    return level(a).mu;
  }

  /// E^{(a)}_j: boxes in the first j columns of mu^{(a)}.
  int column_area(int a, int j) const {
    int total = 0;
    for (int part : shape(a)) total += std::min(j, part);
    return total;
  }

  /// p^{(a)}_j for 1 <= a <= n.
  int vacancy(int a, int j) const {
    level(a);
    return column_area(a - 1, j) - 2 * column_area(a, j) +
           column_area(a + 1, j);
  }

  /// (mu^{(a)}, (mu^{(a+1)}, J^{(a+1)}), ..., (mu^{(n)}, J^{(n)})) as a
  /// configuration of rank n - a on letters 1..n-a+1.
  RiggedConfiguration truncated(int a) const {
    if (a < 0 || a >= rank_)
      throw precondition_error("truncation level must lie in 0..n-1");
    std::vector<RiggedLevel> rest(levels_.begin() + a, levels_.end());
    return RiggedConfiguration(rank_ - a, shape(a), std::move(rest),
                               composition_);
  }

  /// Copy with every level sorted into canonical partition order.  Rows of
  /// equal length keep their relative order, so a valid composition-mode
  /// configuration maps to the valid partition-mode one it represents.
  RiggedConfiguration as_partitions() const {
    return RiggedConfiguration(rank_, mu0_, levels_, false);
  }

  bool operator==(const RiggedConfiguration&) const = default;

 private:
  static void canonicalize(RiggedLevel& lv) {
    std::vector<std::size_t> order(lv.mu.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                       if (lv.mu[x] != lv.mu[y]) return lv.mu[x] > lv.mu[y];
                       return lv.riggings[x] < lv.riggings[y];
                     });
    RiggedLevel sorted;
    for (auto i : order) {
      sorted.mu.push_back(lv.mu[i]);
      sorted.riggings.push_back(lv.riggings[i]);
    }
    lv = std::move(sorted);
  }

  int rank_;
  bool composition_;
  std::vector<int> mu0_;
  std::vector<RiggedLevel> levels_;
};

// ---------------------------------------------------------------------------
// Validation

/// First violated rigging constraint: level a, row length j and the row
/// indices (0-based) involved.
struct Violation {
  int level = 0;
  int length = 0;
  std::vector<std::size_t> rows;
  std::string message;
};

inline std::optional<Violation> validate(const RiggedConfiguration& rc) {
  for (int a = 1; a <= rc.rank(); ++a) {
    const auto& lv = rc.level(a);
    std::map<int, std::vector<std::size_t>> by_length;
    for (std::size_t i = 0; i < lv.mu.size(); ++i)
      by_length[lv.mu[i]].push_back(i);
    for (const auto& [j, rows] : by_length) {
      auto fail = [&, j = j](std::vector<std::size_t> which, std::string why) {
        return Violation{a, j, std::move(which),
                         "level " + std::to_string(a) + ", length " +
                             std::to_string(j) + ": " + std::move(why)};
      };
      const int vac = rc.vacancy(a, j);
      if (lv.riggings[rows.front()] < 0)
        return fail({rows.front()}, "negative rigging " +
                                        std::to_string(lv.riggings[rows.front()]));
      for (std::size_t k = 1; k < rows.size(); ++k)
        if (lv.riggings[rows[k - 1]] > lv.riggings[rows[k]])
          return fail({rows[k - 1], rows[k]}, "riggings not weakly increasing");
      if (lv.riggings[rows.back()] > vac)
        return fail({rows.back()},
                    "rigging " + std::to_string(lv.riggings[rows.back()]) +
                        " exceeds vacancy number " + std::to_string(vac));
    }
  }
  return std::nullopt;
}

inline bool is_valid(const RiggedConfiguration& rc) {
  return !validate(rc).has_value();
}

inline void require_valid(const RiggedConfiguration& rc) {
  if (auto v = validate(rc)) throw invalid_rc(v->message);
}

// ---------------------------------------------------------------------------
// Enumeration

/// Visits every valid rigged configuration of the given rank with the given
/// mu^{(0)}, levels in canonical partition form, each exactly once.
/// Throws capacity_exceeded when |mu^{(0)}| > cap.
template <class F>
void for_each_rc(int rank, const std::vector<int>& mu0, int cap, F&& visit) {
  const int size0 = std::accumulate(mu0.begin(), mu0.end(), 0);
  if (size0 > cap)
    throw capacity_exceeded("|mu0| = " + std::to_string(size0) +
                            " exceeds the bound " + std::to_string(cap));
  if (rank < 1) throw precondition_error("rank must be at least 1");

  std::vector<std::vector<int>> shapes(static_cast<std::size_t>(rank) + 2);
  shapes[0] = mu0;

  auto area = [&](int a, int j) {
    int t = 0;
    for (int part : shapes[static_cast<std::size_t>(a)]) t += std::min(j, part);
    return t;
  };
  auto vac = [&](int a, int j) {
    return area(a - 1, j) - 2 * area(a, j) + area(a + 1, j);
  };
  auto level_admissible = [&](int a) {
    for (int part : shapes[static_cast<std::size_t>(a)])
      if (vac(a, part) < 0) return false;
    return true;
  };

  // One block per (level, row length): its multiplicity and vacancy bound.
  struct Block {
    int level;
    int length;
    int count;
    int bound;
  };

  auto emit_riggings = [&]() {
    std::vector<Block> blocks;
    for (int a = 1; a <= rank; ++a) {
      const auto& mu = shapes[static_cast<std::size_t>(a)];
      for (std::size_t i = 0; i < mu.size();) {
        std::size_t k = i;
        while (k < mu.size() && mu[k] == mu[i]) ++k;
        blocks.push_back({a, mu[i], static_cast<int>(k - i), vac(a, mu[i])});
        i = k;
      }
    }
    std::vector<RiggedLevel> levels(static_cast<std::size_t>(rank));
    for (int a = 1; a <= rank; ++a)
      levels[static_cast<std::size_t>(a - 1)].mu =
          shapes[static_cast<std::size_t>(a)];
    auto rec = [&](auto& self, std::size_t b) -> void {
      if (b == blocks.size()) {
        visit(RiggedConfiguration(rank, mu0, levels));
        return;
      }
      const Block& blk = blocks[b];
      auto& riggings = levels[static_cast<std::size_t>(blk.level - 1)].riggings;
      for_each_weakly_increasing(
          blk.count, 0, blk.bound, [&](const std::vector<int>& seq) {
            riggings.insert(riggings.end(), seq.begin(), seq.end());
            self(self, b + 1);
            riggings.resize(riggings.size() - seq.size());
          });
    };
    rec(rec, 0);
  };

  // Shapes are chosen top-down in size: |mu^{(a)}| <= |mu^{(a-1)}| holds for
  // every valid configuration (the path weight is a partition).  Level a is
  // checked as soon as mu^{(a+1)} is fixed.
  auto choose = [&](auto& self, int a, int max_size) -> void {
    if (a > rank) {
      if (level_admissible(rank)) emit_riggings();
      return;
    }
    for (int size = 0; size <= max_size; ++size) {
      for_each_partition(size, [&](const std::vector<int>& p) {
        shapes[static_cast<std::size_t>(a)] = p;
        if (a >= 2 && !level_admissible(a - 1)) return;
        self(self, a + 1, size);
      });
    }
    shapes[static_cast<std::size_t>(a)].clear();
  };
  choose(choose, 1, size0);
}

inline std::vector<RiggedConfiguration> enumerate_rcs(
    int rank, const std::vector<int>& mu0, int cap) {
  std::vector<RiggedConfiguration> out;
  for_each_rc(rank, mu0, cap,
              [&](RiggedConfiguration rc) { out.push_back(std::move(rc)); });
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

/// One block per mu^{(a)}: a header line "mu(a)" followed by one line per row,
/// drawn as "[]" cells.  For a >= 1 the vacancy number p^{(a)}_j of the row is
/// printed on the left and the rigging on the right.
inline std::string render_ascii(const RiggedConfiguration& rc,
                                bool color = false) {
  const char* vac_on = color ? "\x1b[36m" : "";
  const char* rig_on = color ? "\x1b[33m" : "";
  const char* off = color ? "\x1b[0m" : "";
  std::ostringstream out;
  auto cells = [](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += "[]";
    return s;
  };
  out << "mu(0)\n";
  for (int part : rc.mu0()) out << "  " << cells(part) << "\n";
  for (int a = 1; a <= rc.rank(); ++a) {
    out << "mu(" << a << ")\n";
    const auto& lv = rc.level(a);
    std::size_t width = 1;
    for (int part : lv.mu)
      width = std::max(width, std::to_string(rc.vacancy(a, part)).size());
    for (std::size_t i = 0; i < lv.mu.size(); ++i) {
      const std::string v = std::to_string(rc.vacancy(a, lv.mu[i]));
      out << "  " << std::string(width - v.size(), ' ') << vac_on << v << off
          << " " << cells(lv.mu[i]) << " " << rig_on << lv.riggings[i] << off
          << "\n";
    }
  }
  return out.str();
}

}  // namespace kkr
