#pragma once

// Vertex-operator realization of the KKR bijection, rigged configuration ->
// highest path:
//
//   p = Phi_1 C_1 Phi_2 C_2 ... Phi_n C_n (p^{(n)}),
//   p^{(n)} = (n+1)^{mu^{(n)}_1} (x) ... (x) (n+1)^{mu^{(n)}_l}.
//
// C_a attaches modes to the factors of p^{(a)} from the riggings J^{(a)} and
// the energy function, then normal orders the affine word.  Phi_a spreads the
// normal ordered word out with single boxes of letter a according to its
// modes and carries it through the vacuum a^{mu^{(a-1)}_1} (x) ... by R.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kkr/crystal.hpp"
#include "kkr/error.hpp"
#include "kkr/notation.hpp"
#include "kkr/rigged_config.hpp"

namespace kkr {

// ---------------------------------------------------------------------------
// Normal ordering

struct NormalOrdering {
  /// |S_m|: reorderings reachable by R that keep equal-length factors in order.
  std::size_t reorderings = 0;
  /// chain[i - 1] = |S_i| for i = 1..m.
  std::vector<std::size_t> chain;
  /// S_1, canonical form first.
  std::vector<AffineTensorWord> forms;
  /// Mode sequence shared by every member of S_1.
  std::vector<int> modes;

  const AffineTensorWord& canonical() const { return forms.front(); }
};

namespace detail {

struct Slot {
  AffineElement factor;
  std::size_t origin;

  auto operator<=>(const Slot&) const = default;
  bool operator==(const Slot&) const = default;
};

using Arrangement = std::vector<Slot>;

// Longer factors first, then the smaller concatenated tableau word.
inline bool canonical_before(const AffineTensorWord& x,
                             const AffineTensorWord& y) {
  const auto lx = x.lengths();
  const auto ly = y.lengths();
  if (lx != ly) return lx > ly;
  std::vector<Letter> wx;
  std::vector<Letter> wy;
  for (const auto& f : x) {
    auto l = f.element.letters();
    wx.insert(wx.end(), l.begin(), l.end());
  }
  for (const auto& f : y) {
    auto l = f.element.letters();
    wy.insert(wy.end(), l.begin(), l.end());
  }
  if (wx != wy) return wx < wy;
  return x < y;
}

}  // namespace detail

/// Computes S_m by breadth-first closure under adjacent affine R moves (never
/// exchanging two factors of equal length), then S_{i-1} = members of S_i
/// with the largest i-th mode, down to S_1.
inline NormalOrdering normal_order(const AffineTensorWord& s) {
  NormalOrdering result;
  const std::size_t m = s.size();
  if (m == 0) {
    result.reorderings = 1;
    result.forms.push_back(s);
    return result;
  }

  detail::Arrangement start;
  for (std::size_t i = 0; i < m; ++i) start.push_back({s[i], i});
  std::set<detail::Arrangement> seen{start};
  std::deque<detail::Arrangement> queue{start};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (cur[i].factor.element.length() == cur[i + 1].factor.element.length())
        continue;
      auto [left, right] = affine_r(cur[i].factor, cur[i + 1].factor);
      auto next = cur;
      next[i] = {std::move(left), cur[i + 1].origin};
      next[i + 1] = {std::move(right), cur[i].origin};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  result.reorderings = seen.size();

  std::vector<detail::Arrangement> level(seen.begin(), seen.end());
  result.chain.assign(m, 0);
  result.chain[m - 1] = level.size();
  for (std::size_t i = m; i >= 2; --i) {
    int best = level.front()[i - 1].factor.mode;
    for (const auto& w : level) best = std::max(best, w[i - 1].factor.mode);
    std::erase_if(level, [&](const detail::Arrangement& w) {
      return w[i - 1].factor.mode != best;
    });
    result.chain[i - 2] = level.size();
  }

  for (const auto& w : level) {
    AffineTensorWord form(s.rank(), s.restriction());
    for (const auto& slot : w) form.push_back(slot.factor);
    result.forms.push_back(std::move(form));
  }
  std::sort(result.forms.begin(), result.forms.end(), detail::canonical_before);
  result.modes = modes_of(result.forms.front());
  return result;
}

// ---------------------------------------------------------------------------
// C_a

/// d_i = J_i + sum_{0 <= k < i} H(b_k (x) b_i^{(k+1)}), where b_0 = (a+1)^M
/// (M defaults to the longest row) and b_i^{(j)} is b_i carried left through
/// b_j (x) ... (x) b_{i-1}.  b must live on letters >= a+1.
inline AffineTensorWord assign_modes(const std::vector<int>& mu,
                                     const std::vector<int>& riggings,
                                     const TensorWord& b, int level,
                                     std::optional<int> vacuum_length = {}) {
  if (mu.size() != riggings.size() || mu.size() != b.size())
    throw shape_mismatch("assign_modes needs one row and one rigging per factor");
  if (b.restriction() != level)
    throw precondition_error("factors must live on letters >= " +
                             std::to_string(level + 1));
  AffineTensorWord out(b.rank(), level);
  if (b.empty()) return out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i].length() != mu[i])
      throw shape_mismatch("factor " + std::to_string(i + 1) + " has length " +
                           std::to_string(b[i].length()) + ", row has " +
                           std::to_string(mu[i]));
  const int longest = *std::max_element(mu.begin(), mu.end());
  const int big = vacuum_length.value_or(longest);
  if (big < 1) throw precondition_error("vacuum length must be positive");
  const auto b0 = CrystalElement::row(b.rank(), level + 1, big, level);

  for (std::size_t i = 0; i < b.size(); ++i) {
    // carried = b_i^{(k+1)} for k running from i-1 down to 0.
    int d = riggings[i];
    CrystalElement carried = b[i];
    for (std::size_t k = i; k-- > 0;) {
      d += energy(b[k], carried);
      carried = r_matrix(b[k], carried).left;
    }
    d += energy(b0, carried);
    out.push_back(AffineElement{b[i], d});
  }
  return out;
}

/// All normal ordered forms of C_a(p) together with the mode sequence.
inline NormalOrdering map_c_forms(int a, const RiggedConfiguration& rc,
                                  const TensorWord& p) {
  if (p.rank() != rc.rank())
    throw rank_mismatch("path rank " + std::to_string(p.rank()) +
                        " vs configuration rank " + std::to_string(rc.rank()));
  const auto& lv = rc.level(a);
  if (p.lengths() != lv.mu)
    throw shape_mismatch("p^{(" + std::to_string(a) +
                         ")} does not have the shape of mu^{(" +
                         std::to_string(a) + ")}");
  return normal_order(assign_modes(lv.mu, lv.riggings, with_restriction(p, a), a));
}

inline AffineTensorWord map_c(int a, const RiggedConfiguration& rc,
                              const TensorWord& p) {
  return map_c_forms(a, rc, p).canonical();
}

// ---------------------------------------------------------------------------
// Phi_a

struct PhiImage {
  /// c_1 (x) ... (x) c_k on letters >= a.
  TensorWord image;
  /// What is left over after carrying; expected to hold the letter a only.
  TensorWord tail;

  bool tail_is_pure() const {
    for (const auto& f : tail)
      if (f.count(tail.restriction() + 1) != f.length()) return false;
    return true;
  }
};

inline PhiImage map_phi_detailed(int a, const AffineTensorWord& s,
                                 const std::vector<int>& lambda) {
  const int rank = s.rank();
  if (a < 1 || a > rank)
    throw precondition_error("level " + std::to_string(a) + " outside 1.." +
                             std::to_string(rank));
  if (s.restriction() != a)
    throw precondition_error("Phi_" + std::to_string(a) +
                             " expects factors on letters >= " +
                             std::to_string(a + 1));
  const int r = a - 1;

  // W = T^{d_1} (x) b_1 (x) T^{d_2 - d_1} (x) ... (x) b_m
  std::vector<CrystalElement> w;
  const auto box = CrystalElement::row(rank, a, 1, r);
  int previous = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int d = s[i].mode;
    if (i == 0 && d < 0)
      throw precondition_error("first mode " + std::to_string(d) +
                               " is negative");
    if (d < previous)
      throw precondition_error("modes are not weakly increasing at factor " +
                               std::to_string(i + 1));
    w.insert(w.end(), static_cast<std::size_t>(d - previous), box);
    w.push_back(s[i].element.with_restriction(r));
    previous = d;
  }

  std::vector<CrystalElement> cs;
  for (int part : lambda) {
    if (part < 1) throw shape_mismatch("vacuum row lengths must be positive");
    cs.push_back(CrystalElement::row(rank, a, part, r));
  }

  // W (x) c ~ c' (x) tail: carry each factor of W, rightmost first, through c.
  std::vector<CrystalElement> tail;
  for (std::size_t i = w.size(); i-- > 0;) {
    CrystalElement carrier = w[i];
    for (auto& c : cs) {
      auto img = r_matrix(carrier, c);
      c = std::move(img.left);
      carrier = std::move(img.right);
    }
    tail.push_back(std::move(carrier));
  }
  std::reverse(tail.begin(), tail.end());
  return PhiImage{TensorWord(rank, r, std::move(cs)),
                  TensorWord(rank, r, std::move(tail))};
}

inline TensorWord map_phi(int a, const AffineTensorWord& s,
                          const std::vector<int>& lambda) {
  return map_phi_detailed(a, s, lambda).image;
}

// ---------------------------------------------------------------------------
// The bijection

/// p^{(n)} = (n+1)^{mu^{(n)}_1} (x) ... on letter n+1 alone.
inline TensorWord seed_path(const RiggedConfiguration& rc) {
  const int n = rc.rank();
  TensorWord p(n, n);
  for (int part : rc.shape(n)) p.push_back(CrystalElement::row(n, n + 1, part, n));
  return p;
}

struct StageTrace {
  int level = 0;
  TensorWord input;  // p^{(a)}
  NormalOrdering ordering;
  PhiImage phi;      // phi.image = p^{(a-1)}
};

struct VertexTrace {
  std::vector<StageTrace> stages;  // a = n, n-1, ..., 1
  TensorWord path;
  std::vector<std::string> warnings;
};

namespace detail {

inline TensorWord run_stages(const RiggedConfiguration& rc, int stop,
                             std::vector<StageTrace>* stages,
                             std::vector<std::string>* warnings) {
  TensorWord p = seed_path(rc);
  for (int a = rc.rank(); a > stop; --a) {
    auto ordering = map_c_forms(a, rc, p);
    auto phi = map_phi_detailed(a, ordering.canonical(), rc.shape(a - 1));
    if (warnings && !phi.tail_is_pure())
      warnings->push_back("Phi_" + std::to_string(a) + ": tail " +
                          to_string(phi.tail) + " contains letters other than " +
                          std::to_string(a));
    TensorWord next = phi.image;
    if (stages)
      stages->push_back({a, std::move(p), std::move(ordering), std::move(phi)});
    p = std::move(next);
  }
  return p;
}

}  // namespace detail

/// p^{(a)} = Phi_{a+1} C_{a+1} ... Phi_n C_n (p^{(n)}), a word on letters
/// >= a+1.  a = 0 gives the full image.
inline TensorWord intermediate_path(const RiggedConfiguration& rc, int a) {
  if (a < 0 || a > rc.rank())
    throw precondition_error("stage " + std::to_string(a) + " outside 0.." +
                             std::to_string(rc.rank()));
  require_valid(rc);
  return detail::run_stages(rc, a, nullptr, nullptr);
}

inline TensorWord rc_to_path(const RiggedConfiguration& rc) {
  return intermediate_path(rc, 0);
}

inline VertexTrace rc_to_path_traced(const RiggedConfiguration& rc) {
  require_valid(rc);
  VertexTrace trace{{}, TensorWord(rc.rank()), {}};
  trace.path = detail::run_stages(rc, 0, &trace.stages, &trace.warnings);
  return trace;
}

/// Every distinct final path obtained when each C_a may pick any of its normal
/// ordered forms.  A single entry confirms choice independence.
inline std::vector<TensorWord> rc_to_path_all_choices(
    const RiggedConfiguration& rc) {
  require_valid(rc);
  std::set<TensorWord> finals;
  auto descend = [&](auto& self, int a, const TensorWord& p) -> void {
    if (a == 0) {
      finals.insert(p);
      return;
    }
    const auto ordering = map_c_forms(a, rc, p);
    std::set<TensorWord> images;
    for (const auto& form : ordering.forms)
      images.insert(map_phi(a, form, rc.shape(a - 1)));
    for (const auto& next : images) self(self, a - 1, next);
  };
  descend(descend, rc.rank(), seed_path(rc));
  return {finals.begin(), finals.end()};
}

}  // namespace kkr
