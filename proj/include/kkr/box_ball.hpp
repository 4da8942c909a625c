#pragma once

// Box-ball system: a path in B_1 (x) B_1 (x) ... continued to the right by
// the vacuum letter 1.  The time evolution T_l moves the carrier 1^l across
// the state from the left, u (x) p ~ T_l(p) (x) u'.
//
// Scattering data of a state is C_1(p^{(1)}) computed from its rigged
// configuration; inverse scattering is the vertex-operator map.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kkr/crystal.hpp"
#include "kkr/error.hpp"
#include "kkr/kkr_classical.hpp"
#include "kkr/kkr_vertex.hpp"
#include "kkr/notation.hpp"
#include "kkr/rigged_config.hpp"

namespace kkr {

class BoxBallState {
 public:
  BoxBallState(int rank, const std::vector<Letter>& letters) : window_(rank) {
    if (rank < 1) throw precondition_error("rank must be at least 1");
    for (Letter c : letters) window_.push_back(CrystalElement::row(rank, c, 1));
  }

  explicit BoxBallState(TensorWord window) : window_(std::move(window)) {
    if (window_.rank() < 1) throw precondition_error("rank must be at least 1");
    if (window_.restriction() != 0)
      throw precondition_error("box-ball states use the full alphabet");
    for (const auto& f : window_)
      if (f.length() != 1)
        throw shape_mismatch("box-ball states are words of single boxes");
  }

  /// Parses the bare digit form "1111222211..." (letters > 9 as "(12)").
  static BoxBallState parse(std::string_view text, int rank) {
    const auto letters = parse_letters(text);
    for (Letter c : letters)
      if (c < 1 || c > rank + 1)
        throw parse_error("letter " + std::to_string(c) + " out of alphabet 1.." +
                          std::to_string(rank + 1));
    return BoxBallState(rank, letters);
  }

  int rank() const noexcept { return window_.rank(); }
  std::size_t size() const noexcept { return window_.size(); }
  const TensorWord& word() const noexcept { return window_; }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (const auto& f : window_) out.push_back(f.letters().front());
    return out;
  }

  /// Number of boxes that are not vacuum.
  int balls() const {
    int count = 0;
    for (const auto& f : window_) count += f.count(1) == 0;
    return count;
  }

  /// One past the last non-vacuum box (0 for the vacuum).
  std::size_t extent() const {
    std::size_t end = 0;
    for (std::size_t i = 0; i < window_.size(); ++i)
      if (window_[i].count(1) == 0) end = i + 1;
    return end;
  }

  std::string format() const {
    std::string s;
    for (Letter c : letters()) s += format_letter(c);
    return s;
  }

  bool operator==(const BoxBallState&) const = default;

 private:
  TensorWord window_;
};

/// Carrier capacity that acts as T_infinity on this state.
inline int infinite_carrier(const BoxBallState& state) {
  return state.balls() + 1;
}

/// T_l.  The window is padded with l + (number of balls) vacuum boxes before
/// the pass and trimmed afterwards to max(old size, extent + margin) boxes;
/// margin defaults to 2l.
inline BoxBallState evolve(const BoxBallState& state, int l, int margin = -1) {
  if (l < 1) throw precondition_error("carrier capacity must be positive");
  if (margin < 0) margin = 2 * l;
  const int n = state.rank();
  const auto one = CrystalElement::row(n, 1, 1);
  TensorWord padded = state.word();
  for (int i = 0; i < l + state.balls(); ++i) padded.push_back(one);
  const auto vacuum = CrystalElement::row(n, 1, l);
  auto pass = carrier_pass(vacuum, padded);
  BoxBallState next(std::move(pass.output));
  const std::size_t keep = std::max(
      state.size(), next.extent() + static_cast<std::size_t>(margin));
  std::vector<CrystalElement> factors(
      next.word().begin(),
      next.word().begin() + static_cast<std::ptrdiff_t>(std::min(keep, next.size())));
  return BoxBallState(TensorWord(n, 0, std::move(factors)));
}

/// trace[0] = state, trace[t+1] = evolve(trace[t], l).
inline std::vector<BoxBallState> evolve_trace(const BoxBallState& state, int l,
                                              int steps, int margin = -1) {
  if (steps < 0) throw precondition_error("steps must be nonnegative");
  std::vector<BoxBallState> trace{state};
  for (int t = 0; t < steps; ++t) trace.push_back(evolve(trace.back(), l, margin));
  return trace;
}

/// Amplitudes of the solitons: mu^{(1)} of the state's configuration.
inline std::vector<int> soliton_content(const BoxBallState& state) {
  return classical_path_to_rc(state.word()).level(1).mu;
}

/// Normal ordering of C_1(p^{(1)}); canonical() is the scattering data.
inline NormalOrdering scattering_forms(const BoxBallState& state) {
  const auto rc = classical_path_to_rc(state.word());
  return map_c_forms(1, rc, intermediate_path(rc, 1));
}

inline AffineTensorWord scattering_data(const BoxBallState& state) {
  return scattering_forms(state).canonical();
}

/// The state whose window is the image of rc; mu^{(0)} must be 1^L.
inline BoxBallState inverse_scattering(const RiggedConfiguration& rc) {
  for (int part : rc.mu0())
    if (part != 1)
      throw precondition_error("box-ball states need mu0 = (1, ..., 1)");
  return BoxBallState(rc_to_path(rc));
}

// ---------------------------------------------------------------------------
// Action-angle variables

struct ActionAngleRow {
  int step = 0;
  std::size_t sites = 0;  // length of mu^{(0)} at this step
  std::vector<RiggedLevel> levels;
};

struct ActionAngleReport {
  int carrier = 0;
  std::vector<ActionAngleRow> rows;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Follows the configuration along T_l for the given number of steps and
/// records every departure from: mu^{(a)} constant for a >= 1 and
/// J^{(1)}_i(t) = J^{(1)}_i(0) + t * min(l, mu^{(1)}_i).  Raw riggings are
/// compared; only mu^{(0)} grows with the vacuum.
inline ActionAngleReport action_angle_report(const BoxBallState& state, int l,
                                             int steps) {
  ActionAngleReport report;
  report.carrier = l;
  const auto trace = evolve_trace(state, l, steps);
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const auto rc = classical_path_to_rc(trace[t].word());
    report.rows.push_back({static_cast<int>(t), rc.mu0().size(), rc.levels()});
  }
  const auto& first = report.rows.front().levels;
  for (const auto& row : report.rows) {
    const std::string at = "step " + std::to_string(row.step) + ": ";
    for (std::size_t a = 0; a < first.size(); ++a)
      if (row.levels[a].mu != first[a].mu)
        report.violations.push_back(at + "mu(" + std::to_string(a + 1) +
                                    ") changed");
    if (first.empty() || row.levels[0].mu != first[0].mu) continue;
    const auto& mu = first[0].mu;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const int expected =
          first[0].riggings[i] + row.step * std::min(l, mu[i]);
      if (row.levels[0].riggings[i] != expected)
        report.violations.push_back(
            at + "J(1) row " + std::to_string(i + 1) + " is " +
            std::to_string(row.levels[0].riggings[i]) + ", expected " +
            std::to_string(expected));
    }
  }
  return report;
}

}  // namespace kkr
