#pragma once

// Test-side reference implementations.  None of them uses the piecewise-linear
// formula for R or H.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kkr/crystal.hpp"

namespace oracle {

using kkr::CrystalElement;
using kkr::TensorWord;

// Lattice-word test on the reading word (each row read right to left).
inline bool lattice_highest(const TensorWord& p) {
  std::vector<int> seen(static_cast<std::size_t>(p.rank()) + 2, 0);
  for (const auto& f : p) {
    const auto letters = f.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      const auto c = static_cast<std::size_t>(*it);
      ++seen[c];
      if (c > 1 && seen[c] > seen[c - 1]) return false;
    }
  }
  return true;
}

// R as the unique crystal isomorphism B_l (x) B_m -> B_m (x) B_l: raise x (x) y
// to its highest element, match it by weight with the highest element of
// B_m (x) B_l, and lower back along the recorded path.
inline std::pair<CrystalElement, CrystalElement> brute_r(const CrystalElement& x,
                                                        const CrystalElement& y) {
  const int n = x.rank();
  TensorWord w(n, 0, {x, y});
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= n; ++i)
      if (auto up = kkr::tensor_e(w, i)) {
        w = *up;
        path.push_back(i);
        moved = true;
        break;
      }
  }
  const auto target = kkr::weight(w);
  std::optional<TensorWord> image;
  for (const auto& a : kkr::all_elements(n, y.length()))
    for (const auto& b : kkr::all_elements(n, x.length())) {
      TensorWord v(n, 0, {a, b});
      if (kkr::weight(v) == target && kkr::is_highest(v)) {
        if (image) throw std::logic_error("tensor square is not multiplicity free");
        image = v;
      }
    }
  if (!image) throw std::logic_error("no highest element of matching weight");
  TensorWord v = *image;
  for (auto it = path.rbegin(); it != path.rend(); ++it) v = *kkr::tensor_f(v, *it);
  return {v[0], v[1]};
}

// The affine operator e_0 on B_l: one letter 1 becomes n+1.
inline std::optional<CrystalElement> e0(const CrystalElement& x) {
  auto m = x.mult();
  if (m.front() == 0) return std::nullopt;
  --m.front();
  ++m.back();
  return CrystalElement(x.rank(), m);
}

// e_0 on b (x) b' by the tensor rule; returns the factor it acts on (0 or 1).
inline std::optional<std::pair<TensorWord, int>> tensor_e0(const TensorWord& w) {
  const int phi_left = w[0].mult().back();
  const int eps_right = w[1].mult().front();
  const int side = phi_left >= eps_right ? 0 : 1;
  auto moved = e0(w[side]);
  if (!moved) return std::nullopt;
  auto f = w.factors();
  f[static_cast<std::size_t>(side)] = *moved;
  return std::make_pair(TensorWord(w.rank(), 0, f), side);
}

// Energy on B_l (x) B_m from the affine crystal graph: constant along e_i for
// i >= 1, and along e_0 it rises by one when e_0 acts on the left factor of
// both b (x) b' and its R-image, falls by one when it acts on the right in
// both.  The additive constant is fixed by max H = min(l, m).  R is supplied
// as brute_r so the result stays independent of the library formula.
inline std::map<TensorWord, int> graph_energy(int n, int l, int m) {
  std::map<TensorWord, int> h;
  const TensorWord start(n, 0, {CrystalElement::row(n, 1, l), CrystalElement::row(n, 1, m)});
  h[start] = 0;
  std::deque<TensorWord> queue{start};
  auto visit = [&](const TensorWord& to, int value) {
    auto [it, fresh] = h.emplace(to, value);
    if (fresh) queue.push_back(to);
    else if (it->second != value) throw std::logic_error("energy is not well defined");
  };
  auto swap = [](const TensorWord& w) {
    auto [a, b] = brute_r(w[0], w[1]);
    return TensorWord(w.rank(), 0, {a, b});
  };
  while (!queue.empty()) {
    const TensorWord w = queue.front();
    queue.pop_front();
    const int here = h.at(w);
    for (int i = 1; i <= n; ++i) {
      if (auto up = kkr::tensor_e(w, i)) visit(*up, here);
      if (auto down = kkr::tensor_f(w, i)) visit(*down, here);
    }
    if (auto up = tensor_e0(w)) {
      const auto other = tensor_e0(swap(w));
      int delta = 0;
      if (up->second == 0 && other->second == 0) delta = 1;
      if (up->second == 1 && other->second == 1) delta = -1;
      visit(up->first, here + delta);
    }
    // Walk e_0 backwards too, so the whole affine component is reached.
    for (const auto& a : kkr::all_elements(n, l))
      for (const auto& b : kkr::all_elements(n, m)) {
        const TensorWord v(n, 0, {a, b});
        if (h.count(v)) continue;
        if (auto up = tensor_e0(v); up && up->first == w) {
          const auto other = tensor_e0(swap(v));
          int delta = 0;
          if (up->second == 0 && other->second == 0) delta = 1;
          if (up->second == 1 && other->second == 1) delta = -1;
          visit(v, here - delta);
        }
      }
  }
  int top = h.begin()->second;
  for (const auto& [w, v] : h) top = std::max(top, v);
  for (auto& [w, v] : h) v += std::min(l, m) - top;
  return h;
}

}  // namespace oracle
