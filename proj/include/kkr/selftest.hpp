#pragma once

// Built-in verification suite shared by `kkr selftest` and the acceptance
// runner.  Each check is tied to one acceptance criterion; the quick level
// runs the worked fixtures only, the full level adds the exhaustive suites.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kkr/box_ball.hpp"
#include "kkr/crystal.hpp"
#include "kkr/kkr_classical.hpp"
#include "kkr/kkr_vertex.hpp"
#include "kkr/notation.hpp"
#include "kkr/partitions.hpp"
#include "kkr/rigged_config.hpp"

namespace kkr {

namespace fixtures {

/// Rank 3 configuration whose image is 111*22*3*1*4*2*3.
inline RiggedConfiguration rank3_rc() {
  return RiggedConfiguration(3, {3, 2, 1, 1, 1, 1, 1},
                             {{{2, 2, 1, 1}, {0, 0, 0, 1}},
                              {{2, 1}, {1, 0}},
                              {{1}, {0}}});
}

inline const char* rank3_path() { return "111*22*3*1*4*2*3"; }

/// Thirteen single boxes and their configuration.
inline const char* thirteen_box_state() { return "1111223214322"; }

inline RiggedConfiguration thirteen_box_rc() {
  return RiggedConfiguration(3, std::vector<int>(13, 1),
                             {{{4, 3, 1}, {0, 1, 4}}, {{2, 1}, {0, 0}}, {{1}, {0}}});
}

/// Three solitons of amplitudes 4, 3, 1 over eight time steps, each row
/// 43 boxes wide.
inline const std::vector<std::string>& box_ball_rows() {
  static const std::vector<std::string> rows = {
      "1111222211113321111411111111111111111111111",
      "1111111122221113321141111111111111111111111",
      "1111111111112222113324111111111111111111111",
      "1111111111111111222213432111111111111111111",
      "1111111111111111111122321432211111111111111",
      "1111111111111111111111213221143221111111111",
      "1111111111111111111111121113221114322111111",
      "1111111111111111111111112111113221111432211",
  };
  return rows;
}

}  // namespace fixtures

struct CheckResult {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample, or a summary

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

struct Check {
  std::string name;
  int criterion;
  bool quick;
  std::function<CheckResult()> run;
};

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string describe(const RiggedConfiguration& rc) {
  std::string s = "mu0=" + join(rc.mu0());
  for (int a = 1; a <= rc.rank(); ++a)
    s += " mu" + std::to_string(a) + "=" + join(rc.level(a).mu) + "/J=" +
         join(rc.level(a).riggings);
  return s;
}

// Lattice-word test read off the letters directly: each row x_1..x_s is read
// right to left, and no prefix may contain more c+1 than c.
inline bool lattice_word(const TensorWord& p) {
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

// Number of lattice words in B_{lambda_1} (x) ... by brute force.
inline std::size_t count_highest(int rank, const std::vector<int>& lambda) {
  std::vector<std::vector<CrystalElement>> rows;
  for (int l : lambda) rows.push_back(all_elements(rank, l));
  std::size_t count = 0;
  std::vector<CrystalElement> current;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == rows.size()) {
      count += lattice_word(TensorWord(rank, 0, current));
      return;
    }
    for (const auto& x : rows[i]) {
      current.push_back(x);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

struct ShapeCase {
  int rank;
  std::vector<int> mu0;
};

// Every (n, partition) with n <= max_rank and 1 <= |mu0| <= max_size.
inline std::vector<ShapeCase> shape_cases(int max_rank, int max_size) {
  std::vector<ShapeCase> out;
  for (int n = 1; n <= max_rank; ++n)
    for (int size = 1; size <= max_size; ++size)
      for (auto& p : partitions(size)) out.push_back({n, p});
  return out;
}

inline std::vector<RiggedConfiguration> enumeration(int max_rank, int max_size) {
  std::vector<RiggedConfiguration> out;
  for (const auto& c : shape_cases(max_rank, max_size))
    for_each_rc(c.rank, c.mu0, max_size,
                [&](RiggedConfiguration rc) { out.push_back(std::move(rc)); });
  return out;
}

// ---------------------------------------------------------------------------
// Worked fixtures

inline CheckResult check_vertex_fixture() {
  CheckResult r;
  const auto rc = fixtures::rank3_rc();
  const auto trace = rc_to_path_traced(rc);
  auto expect = [&](bool cond, const std::string& what) {
    ++r.cases;
    if (!cond) r.fail(what);
  };
  expect(to_string(trace.path) == fixtures::rank3_path(),
         "path " + to_string(trace.path));
  expect(trace.stages.size() == 3, "expected three stages");
  if (!r.ok) return r;
  const auto& s3 = trace.stages[0];
  const auto& s2 = trace.stages[1];
  const auto& s1 = trace.stages[2];
  expect(to_string(s3.input) == "4", "p(3) = " + to_string(s3.input));
  expect(to_string(s3.ordering.canonical()) == "4:1",
         "C_3 = " + to_string(s3.ordering.canonical()));
  expect(to_string(s2.input) == "33*4", "p(2) = " + to_string(s2.input));
  expect(s2.ordering.forms.size() == 1 &&
             to_string(s2.ordering.canonical()) == "3:1*34:3",
         "C_2 = " + to_string(s2.ordering.canonical()));
  expect(to_string(s1.input) == "22*23*4*3", "p(1) = " + to_string(s1.input));
  expect(s1.ordering.modes == std::vector<int>{1, 2, 3, 3},
         "C_1 modes " + join(s1.ordering.modes));
  expect(s1.ordering.forms.size() == 3,
         "C_1 has " + std::to_string(s1.ordering.forms.size()) + " forms");
  bool listed = false;
  for (const auto& f : s1.ordering.forms) listed |= to_string(f) == "2:1*3:2*22:3*34:3";
  expect(listed, "2:1*3:2*22:3*34:3 missing from the C_1 forms");
  expect(trace.warnings.empty(), "tail warning");
  return r;
}

inline CheckResult check_direct_scattering() {
  CheckResult r;
  r.cases = 2;
  const auto state = BoxBallState::parse(fixtures::thirteen_box_state(), 3);
  const auto rc = classical_path_to_rc(state.word());
  if (!(rc == fixtures::thirteen_box_rc())) r.fail("got " + describe(rc));
  const auto back = classical_rc_to_path(fixtures::thirteen_box_rc());
  if (!(back == state.word())) r.fail("inverse gives " + to_string(back));
  return r;
}

inline CheckResult check_box_ball_fixture() {
  CheckResult r;
  const auto& rows = fixtures::box_ball_rows();
  const auto start = BoxBallState::parse(rows.front(), 3);
  for (int l : {4, 5, 10, infinite_carrier(start)}) {
    const auto trace = evolve_trace(start, l, 7);
    for (std::size_t t = 0; t < trace.size(); ++t) {
      ++r.cases;
      const auto shown = trace[t].format().substr(0, rows[t].size());
      if (shown != rows[t])
        r.fail("l=" + std::to_string(l) + " t=" + std::to_string(t) + ": " + shown);
      if (soliton_content(trace[t]) != std::vector<int>{4, 3, 1})
        r.fail("l=" + std::to_string(l) + " t=" + std::to_string(t) +
               ": soliton content " + join(soliton_content(trace[t])));
    }
  }
  return r;
}

inline CheckResult check_normal_ordering_fixture() {
  CheckResult r;
  r.cases = 1;
  const auto s = parse_affine_word("1223:5*34:8*1:6", 3);
  const auto no = normal_order(s);
  std::set<std::string> forms;
  for (const auto& f : no.forms) forms.insert(to_string(f));
  const std::set<std::string> expected{"3:5*1224:5*13:9", "1223:5*4:5*13:9"};
  if (no.reorderings != 6)
    r.fail("|S_3| = " + std::to_string(no.reorderings));
  else if (no.chain != std::vector<std::size_t>{2, 2, 6})
    r.fail("chain sizes differ");
  else if (forms != expected)
    r.fail("S_1 = " + to_string(no.canonical()) + " ...");
  else if (no.modes != std::vector<int>{5, 5, 9})
    r.fail("modes " + join(no.modes));
  return r;
}

inline CheckResult check_action_angle() {
  CheckResult r;
  const auto start = BoxBallState::parse(fixtures::box_ball_rows().front(), 3);
  for (int l : {1, 2, infinite_carrier(start)}) {
    ++r.cases;
    const auto report = action_angle_report(start, l, 7);
    if (!report.ok())
      r.fail("l=" + std::to_string(l) + ": " + report.violations.front());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive suites

inline CheckResult check_oracle_equivalence() {
  CheckResult r;
  for (const auto& c : shape_cases(3, 6)) {
    std::set<TensorWord> images;
    std::size_t count = 0;
    for_each_rc(c.rank, c.mu0, 6, [&](const RiggedConfiguration& rc) {
      ++r.cases;
      ++count;
      const auto vertex = rc_to_path(rc);
      const auto classical = classical_rc_to_path(rc);
      if (!(vertex == classical)) {
        r.fail(describe(rc) + ": vertex " + to_string(vertex) + " vs classical " +
               to_string(classical));
        return;
      }
      if (vertex.lengths() != rc.mu0() || !is_highest(vertex) ||
          !lattice_word(vertex)) {
        r.fail(describe(rc) + ": image " + to_string(vertex) +
               " is not a highest path of shape mu0");
        return;
      }
      if (!(classical_path_to_rc(vertex) == rc)) {
        r.fail(describe(rc) + ": round trip differs");
        return;
      }
      images.insert(vertex);
    });
    const auto expected = count_highest(c.rank, c.mu0);
    if (images.size() != count || count != expected)
      r.fail("n=" + std::to_string(c.rank) + " mu0=" + join(c.mu0) + ": " +
             std::to_string(count) + " configurations, " +
             std::to_string(images.size()) + " distinct images, " +
             std::to_string(expected) + " highest paths");
    if (!r.ok) return r;
  }
  return r;
}

inline CheckResult check_yang_baxter() {
  CheckResult r;
  using Triple = std::vector<AffineElement>;
  auto r12 = [](Triple t) {
    auto [x, y] = affine_r(t[0], t[1]);
    t[0] = x;
    t[1] = y;
    return t;
  };
  auto r23 = [](Triple t) {
    auto [x, y] = affine_r(t[1], t[2]);
    t[1] = x;
    t[2] = y;
    return t;
  };
  for (int n = 1; n <= 2; ++n)
    for (int l = 1; l <= 2; ++l)
      for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
          for (const auto& x : all_elements(n, l))
            for (const auto& y : all_elements(n, m))
              for (const auto& z : all_elements(n, k)) {
                ++r.cases;
                const Triple t{{x, 0}, {y, 0}, {z, 0}};
                if (r12(r23(r12(t))) != r23(r12(r23(t))))
                  r.fail("fails on " + to_string(x) + "*" + to_string(y) + "*" +
                         to_string(z) + " (n=" + std::to_string(n) + ")");
              }
  return r;
}

inline CheckResult check_r_inverse() {
  CheckResult r;
  for (int n = 1; n <= 2; ++n)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        for (const auto& x : all_elements(n, l))
          for (const auto& y : all_elements(n, m)) {
            ++r.cases;
            const AffineElement a{x, 2};
            const AffineElement b{y, -1};
            auto [c, d] = affine_r(a, b);
            auto [e, f] = affine_r(c, d);
            const auto wx = weight(x);
            const auto wc = weight(c.element);
            std::vector<int> before(wx.size());
            std::vector<int> after(wx.size());
            for (std::size_t i = 0; i < wx.size(); ++i) {
              before[i] = wx[i] + y.mult()[i];
              after[i] = wc[i] + d.element.mult()[i];
            }
            if (!(e == a && f == b))
              r.fail("R is not an involution on " + to_string(x) + "*" + to_string(y));
            else if (before != after || c.element.length() != m ||
                     d.element.length() != l)
              r.fail("weight or shape not conserved on " + to_string(x) + "*" +
                     to_string(y));
          }
  return r;
}

inline CheckResult check_r_crystal_morphism() {
  CheckResult r;
  auto swap = [](const TensorWord& w) {
    auto [y, x] = combinatorial_r(w[0], w[1]);
    return TensorWord(w.rank(), 0, {y, x});
  };
  for (int n = 1; n <= 2; ++n)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        for (const auto& x : all_elements(n, l))
          for (const auto& y : all_elements(n, m)) {
            const TensorWord w(n, 0, {x, y});
            for (int i = 1; i <= n; ++i) {
              ++r.cases;
              const auto img = swap(w);
              for (bool raise : {true, false}) {
                const auto moved = raise ? tensor_e(w, i) : tensor_f(w, i);
                const auto moved_img = raise ? tensor_e(img, i) : tensor_f(img, i);
                const bool same = moved.has_value() == moved_img.has_value() &&
                                  (!moved || swap(*moved) == *moved_img);
                if (!same)
                  r.fail(std::string(raise ? "e_" : "f_") + std::to_string(i) +
                         " does not commute with R on " + to_string(w));
              }
            }
          }
  return r;
}

inline CheckResult check_energy_bounds() {
  CheckResult r;
  for (int n = 1; n <= 2; ++n)
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m) {
        int lo = l + m;
        int hi = -1;
        for (const auto& x : all_elements(n, l))
          for (const auto& y : all_elements(n, m)) {
            ++r.cases;
            const int h = energy(x, y);
            lo = std::min(lo, h);
            hi = std::max(hi, h);
            if (h < 0 || h > std::min(l, m))
              r.fail("H(" + to_string(x) + "*" + to_string(y) + ") = " +
                     std::to_string(h));
          }
        if (lo != 0 || hi != std::min(l, m))
          r.fail("n=" + std::to_string(n) + " l=" + std::to_string(l) +
                 " m=" + std::to_string(m) + ": H ranges over [" +
                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
  return r;
}

inline CheckResult check_vacuum_length_independence() {
  CheckResult r;
  for (const auto& rc : enumeration(3, 6)) {
    const auto trace = rc_to_path_traced(rc);
    for (const auto& stage : trace.stages) {
      const auto& lv = rc.level(stage.level);
      if (lv.mu.empty()) continue;
      const int longest = *std::max_element(lv.mu.begin(), lv.mu.end());
      const auto b = with_restriction(stage.input, stage.level);
      const auto reference = assign_modes(lv.mu, lv.riggings, b, stage.level);
      for (int big = longest; big <= longest + 3; ++big) {
        ++r.cases;
        if (!(assign_modes(lv.mu, lv.riggings, b, stage.level, big) == reference))
          r.fail(describe(rc) + ": modes at level " + std::to_string(stage.level) +
                 " change with b_0 of length " + std::to_string(big));
      }
    }
    if (!r.ok) return r;
  }
  return r;
}

inline CheckResult check_choice_independence() {
  CheckResult r;
  auto all = enumeration(3, 6);
  std::vector<RiggedConfiguration> sample;
  std::mt19937 rng(20240601u);
  std::sample(all.begin(), all.end(), std::back_inserter(sample), 50, rng);
  // A uniform sample rarely meets a stage with several normal forms, so every
  // configuration with |mu0| <= 8 that has one is explored as well.
  std::size_t branching = 0;
  auto explore = [&](const RiggedConfiguration& rc, bool sampled) {
    const auto trace = rc_to_path_traced(rc);
    bool branches = false;
    for (const auto& stage : trace.stages)
      branches |= stage.ordering.forms.size() > 1;
    if (!sampled && !branches) return;
    ++r.cases;
    branching += branches;
    const auto finals = rc_to_path_all_choices(rc);
    if (finals.size() != 1)
      r.fail(describe(rc) + ": " + std::to_string(finals.size()) + " final paths");
    else if (!(finals.front() == trace.path))
      r.fail(describe(rc) + ": branch image differs from the canonical image");
  };
  for (const auto& rc : sample) explore(rc, true);
  for (const auto& c : shape_cases(3, 8))
    for_each_rc(c.rank, c.mu0, 8,
                [&](const RiggedConfiguration& rc) { explore(rc, false); });
  if (r.ok)
    r.detail = std::to_string(branching) +
               " configurations with several normal forms at some stage";
  return r;
}

}  // namespace detail

inline const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"vertex-fixture", 1, true, detail::check_vertex_fixture},
      {"direct-scattering-fixture", 2, true, detail::check_direct_scattering},
      {"box-ball-fixture", 3, true, detail::check_box_ball_fixture},
      {"normal-ordering-fixture", 4, true, detail::check_normal_ordering_fixture},
      {"oracle-equivalence", 5, false, detail::check_oracle_equivalence},
      {"yang-baxter", 6, false, detail::check_yang_baxter},
      {"r-inverse", 6, false, detail::check_r_inverse},
      {"r-crystal-morphism", 6, false, detail::check_r_crystal_morphism},
      {"energy-bounds", 6, false, detail::check_energy_bounds},
      {"vacuum-length-independence", 6, false,
       detail::check_vacuum_length_independence},
      {"action-angle", 7, true, detail::check_action_angle},
      {"choice-independence", 8, false, detail::check_choice_independence},
  };
  return all;
}

struct CheckOutcome {
  const Check* check;
  CheckResult result;
  double seconds;
};

/// Runs the quick checks, or all of them when full is set, restricted to the
/// given name when filter is nonempty.  Exceptions count as failures.
inline std::vector<CheckOutcome> run_checks(bool full, std::string_view filter = {}) {
  std::vector<CheckOutcome> out;
  for (const auto& c : checks()) {
    if (!filter.empty() ? c.name != filter : !(full || c.quick)) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    out.push_back({&c, std::move(result), took.count()});
  }
  return out;
}

}  // namespace kkr
