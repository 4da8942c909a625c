#pragma once

// The classical KKR bijection between highest paths in B_{l_1} (x) ... (x)
// B_{l_k} and rigged configurations with mu^{(0)} = (l_1, ..., l_k).
//
// A string (row) of mu^{(a)} with length j and rigging J is singular when
// J = p^{(a)}_j.
//
// Path -> RC.  Factors are read left to right and each row x_1 ... x_s is fed
// as the single boxes x_s, ..., x_1.  Adding a box with letter b:
//   * for a = b-1 down to 1 choose the longest singular string of mu^{(a)}
//     whose length is below the bound (no bound for a = b-1, afterwards the
//     length chosen at a+1, plus one); if there is none, take a new string
//     of length 0 and stop looking for long strings below;
//   * append a length-1 row to mu^{(0)}, lengthen every chosen string by one
//     and reset its rigging to the new vacancy number.
// Once the s boxes of a row are in, the s new rows of mu^{(0)} merge into one
// row of length s.
//
// RC -> path.  The last row of mu^{(0)}, of length s, is peeled box by box:
// split it as (s-1, 1) and remove the box.  Removing a box:
//   * for a = 1, 2, ... choose the shortest singular string of mu^{(a)} of
//     length at least the one chosen at a-1 (1 for a = 1), lowest row index
//     among equals; the letter is the first a with no such string, or n+1;
//   * drop the mu^{(0)} box, shorten every chosen string by one and reset its
//     rigging to the new vacancy number.
// The s letters come out as x_1 <= ... <= x_s and form the last factor.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kkr/crystal.hpp"
#include "kkr/error.hpp"
#include "kkr/notation.hpp"
#include "kkr/rigged_config.hpp"

namespace kkr {

namespace detail {

// Mutable working copy: rows kept in insertion order.
struct WorkingRC {
  int rank;
  std::vector<int> mu0;
  std::vector<std::vector<int>> mu;  // mu[a-1]
  std::vector<std::vector<int>> J;

  const std::vector<int>& shape(int a) const {
    static const std::vector<int> empty;
    if (a == 0) return mu0;
    if (a == rank + 1) return empty;
    return mu[static_cast<std::size_t>(a - 1)];
  }
  int area(int a, int j) const {
    int t = 0;
    for (int part : shape(a)) t += std::min(j, part);
    return t;
  }
  int vacancy(int a, int j) const {
    return area(a - 1, j) - 2 * area(a, j) + area(a + 1, j);
  }
  bool singular(int a, std::size_t row) const {
    const auto& m = mu[static_cast<std::size_t>(a - 1)];
    return J[static_cast<std::size_t>(a - 1)][row] == vacancy(a, m[row]);
  }
};

inline void add_box(WorkingRC& w, Letter b) {
  // chosen[a-1]: row index, or nullopt for a new string.
  std::vector<std::optional<std::size_t>> chosen(
      static_cast<std::size_t>(w.rank));
  int bound = -1;  // -1: unbounded
  for (int a = b - 1; a >= 1; --a) {
    const auto& m = w.mu[static_cast<std::size_t>(a - 1)];
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (bound >= 0 && m[r] >= bound) continue;
      if (!w.singular(a, r)) continue;
      if (!best || m[r] > m[*best]) best = r;
    }
    chosen[static_cast<std::size_t>(a - 1)] = best;
    bound = (best ? m[*best] : 0) + 1;
  }
  w.mu0.push_back(1);
  std::vector<std::pair<int, std::size_t>> grown;
  for (int a = 1; a < b; ++a) {
    auto& m = w.mu[static_cast<std::size_t>(a - 1)];
    auto& J = w.J[static_cast<std::size_t>(a - 1)];
    const auto& pick = chosen[static_cast<std::size_t>(a - 1)];
    if (pick) {
      ++m[*pick];
      grown.emplace_back(a, *pick);
    } else {
      m.push_back(1);
      J.push_back(0);
      grown.emplace_back(a, m.size() - 1);
    }
  }
  for (auto [a, r] : grown)
    w.J[static_cast<std::size_t>(a - 1)][r] =
        w.vacancy(a, w.mu[static_cast<std::size_t>(a - 1)][r]);
}

// Removes the last mu0 box (a row of length 1) and returns its letter.
inline Letter remove_box(WorkingRC& w) {
  std::vector<std::pair<int, std::size_t>> chosen;
  int previous = 1;
  Letter letter = w.rank + 1;
  for (int a = 1; a <= w.rank; ++a) {
    const auto& m = w.mu[static_cast<std::size_t>(a - 1)];
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m[r] < previous || !w.singular(a, r)) continue;
      if (!best || m[r] < m[*best]) best = r;
    }
    if (!best) {
      letter = a;
      break;
    }
    chosen.emplace_back(a, *best);
    previous = m[*best];
  }
  w.mu0.pop_back();
  for (auto [a, r] : chosen) --w.mu[static_cast<std::size_t>(a - 1)][r];
  for (auto [a, r] : chosen) {
    const int len = w.mu[static_cast<std::size_t>(a - 1)][r];
    if (len > 0) w.J[static_cast<std::size_t>(a - 1)][r] = w.vacancy(a, len);
  }
  for (std::size_t a = 0; a < w.mu.size(); ++a) {
    std::vector<int> m;
    std::vector<int> J;
    for (std::size_t r = 0; r < w.mu[a].size(); ++r) {
      if (w.mu[a][r] == 0) continue;
      m.push_back(w.mu[a][r]);
      J.push_back(w.J[a][r]);
    }
    w.mu[a] = std::move(m);
    w.J[a] = std::move(J);
  }
  return letter;
}

}  // namespace detail

/// Classical box-adding algorithm; p must be a highest path (restriction 0).
inline RiggedConfiguration classical_path_to_rc(const TensorWord& p) {
  if (p.restriction() != 0)
    throw precondition_error("paths must use the full alphabet");
  if (!is_highest(p)) throw not_highest("path " + to_string(p) + " is not highest");
  const int n = p.rank();
  if (n < 1) throw precondition_error("rank must be at least 1");
  detail::WorkingRC w{n, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(n)),
                      std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  for (const auto& factor : p) {
    const auto letters = factor.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      detail::add_box(w, *it);
    const auto s = static_cast<std::size_t>(factor.length());
    w.mu0.resize(w.mu0.size() - s);
    w.mu0.push_back(factor.length());
  }
  std::vector<RiggedLevel> levels;
  for (int a = 1; a <= n; ++a)
    levels.push_back({w.mu[static_cast<std::size_t>(a - 1)],
                      w.J[static_cast<std::size_t>(a - 1)]});
  return RiggedConfiguration(n, std::move(w.mu0), std::move(levels));
}

/// Classical box-removal algorithm; rc must be valid.
inline TensorWord classical_rc_to_path(const RiggedConfiguration& input) {
  require_valid(input);
  const auto rc = input.as_partitions();
  const int n = rc.rank();
  detail::WorkingRC w{n, rc.mu0(), {}, {}};
  for (const auto& lv : rc.levels()) {
    w.mu.push_back(lv.mu);
    w.J.push_back(lv.riggings);
  }
  std::vector<CrystalElement> factors;
  while (!w.mu0.empty()) {
    const int s = w.mu0.back();
    std::vector<Letter> letters;
    for (int t = 0; t < s; ++t) {
      const int rest = w.mu0.back();
      if (rest > 1) {
        w.mu0.back() = rest - 1;
        w.mu0.push_back(1);
      }
      letters.push_back(detail::remove_box(w));
    }
    factors.push_back(CrystalElement::from_letters(n, letters));
  }
  for (const auto& m : w.mu)
    if (!m.empty())
      throw invalid_rc("configuration does not empty out with mu0");
  std::reverse(factors.begin(), factors.end());
  return TensorWord(n, 0, std::move(factors));
}

/// One step of T_l on a single-box path p compared on the configuration side:
/// true iff RC(T_l(p)) keeps every mu^{(a)}, shifts J^{(1)}_i by
/// min(l, mu^{(1)}_i) and keeps J^{(a)} for a >= 2.  p must end in enough
/// vacuum that the carrier 1^l comes back empty; otherwise precondition_error.
inline bool rigging_shift_check(const TensorWord& p, int l) {
  if (l < 1) throw precondition_error("carrier capacity must be positive");
  for (const auto& f : p)
    if (f.length() != 1)
      throw precondition_error("rigging_shift_check expects single-box factors");
  const auto before = classical_path_to_rc(p);
  const auto vacuum = CrystalElement::row(p.rank(), 1, l);
  auto pass = carrier_pass(vacuum, p);
  if (pass.carrier != vacuum)
    throw precondition_error("insufficient vacuum: the carrier leaves as " +
                             to_string(pass.carrier));
  const auto after = classical_path_to_rc(pass.output);
  for (int a = 1; a <= p.rank(); ++a) {
    const auto& x = before.level(a);
    const auto& y = after.level(a);
    if (x.mu != y.mu) return false;
    for (std::size_t i = 0; i < x.mu.size(); ++i) {
      const int shift = a == 1 ? std::min(l, x.mu[i]) : 0;
      if (y.riggings[i] != x.riggings[i] + shift) return false;
    }
  }
  return true;
}

}  // namespace kkr
