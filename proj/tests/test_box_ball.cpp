#include <gtest/gtest.h>

#include <random>

#include "kkr/box_ball.hpp"
#include "kkr/notation.hpp"
#include "oracles.hpp"

using namespace kkr;

namespace {

const std::vector<std::string> kRows = {
    "1111222211113321111411111111111111111111111",
    "1111111122221113321141111111111111111111111",
    "1111111111112222113324111111111111111111111",
    "1111111111111111222213432111111111111111111",
    "1111111111111111111122321432211111111111111",
    "1111111111111111111111213221143221111111111",
    "1111111111111111111111121113221114322111111",
    "1111111111111111111111112111113221111432211",
};

BoxBallState state(const std::string& s, int n = 3) { return BoxBallState::parse(s, n); }

RiggedConfiguration thirteen() {
  return RiggedConfiguration(3, std::vector<int>(13, 1),
                             {{{4, 3, 1}, {0, 1, 4}}, {{2, 1}, {0, 0}}, {{1}, {0}}});
}

// Random highest single-box states: a random lattice word followed by vacuum.
BoxBallState random_highest(std::mt19937& rng, int n, int length) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Letter> letters;
  for (int i = 0; i < length; ++i) {
    std::vector<Letter> allowed{1};
    for (Letter c = 2; c <= n + 1; ++c)
      if (seen[static_cast<std::size_t>(c)] < seen[static_cast<std::size_t>(c - 1)])
        allowed.push_back(c);
    const Letter c = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    ++seen[static_cast<std::size_t>(c)];
    letters.push_back(c);
  }
  return BoxBallState(n, letters);
}

}  // namespace

TEST(BoxBallState, ParseAndFormat) {
  const auto s = state("1121(10)1", 9);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_EQ(s.balls(), 2);
  EXPECT_EQ(s.extent(), 5u);
  EXPECT_EQ(s.format(), "1121(10)1");
  EXPECT_THROW(state("1151", 3), parse_error);
  EXPECT_THROW(BoxBallState(parse_word("11*2", 2)), shape_mismatch);
}

TEST(Evolve, ReproducesTable) {
  for (int l : {4, 5, 10, 100}) {
    const auto trace = evolve_trace(state(kRows[0]), l, 7);
    ASSERT_EQ(trace.size(), 8u);
    for (std::size_t t = 0; t < trace.size(); ++t) {
      EXPECT_EQ(trace[t].format().substr(0, kRows[t].size()), kRows[t]) << "l=" << l;
      EXPECT_EQ(soliton_content(trace[t]), (std::vector<int>{4, 3, 1}));
    }
  }
}

TEST(Evolve, SmallCarriersDiffer) {
  EXPECT_NE(evolve(state(kRows[0]), 3).format().substr(0, 43), kRows[1]);
}

TEST(Evolve, SimpleMotions) {
  // The window keeps 2l vacuum boxes beyond the last ball.
  EXPECT_EQ(evolve(state("1111"), 3).format(), "111111");
  EXPECT_EQ(evolve(state("11111111"), 3).format(), "11111111");
  EXPECT_EQ(evolve(state("21111", 1), 1).format(), "12111");
  EXPECT_EQ(evolve(state("2211111111", 1), 2).format(), "1122111111");
  EXPECT_EQ(evolve_trace(state("1211"), 2, 0).size(), 1u);
  EXPECT_THROW(evolve(state("12"), 0), precondition_error);
}

TEST(Evolve, ConservesWeightAndHighestness) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const auto s = random_highest(rng, n, 4 + trial % 17);
    for (int l : {1, 2, 3, 5}) {
      const auto t = evolve(s, l);
      auto a = weight(s.word());
      auto b = weight(t.word());
      a.front() = b.front() = 0;
      ASSERT_EQ(a, b);
      ASSERT_TRUE(oracle::lattice_highest(t.word()));
      ASSERT_EQ(soliton_content(t), soliton_content(s));
    }
  }
}

TEST(Evolve, TimeEvolutionsCommute) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 3;
    const auto s = random_highest(rng, n, 1 + trial % 20);
    for (auto [l, m] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 5}}) {
      // Equal margins so the two windows line up.
      const auto x = evolve(evolve(s, l, 12), m, 12);
      const auto y = evolve(evolve(s, m, 12), l, 12);
      ASSERT_EQ(x.format(), y.format()) << s.format();
    }
  }
  const auto s = state(kRows[0]);
  EXPECT_EQ(evolve(evolve(s, 2, 8), 3, 8), evolve(evolve(s, 3, 8), 2, 8));
}

TEST(Scattering, Fixtures) {
  const auto t4 = state(kRows[4]);
  const auto rc = classical_path_to_rc(t4.word());
  EXPECT_EQ(to_string(intermediate_path(rc, 1)), "2222*233*4");
  const auto data = scattering_data(t4);
  EXPECT_EQ(data.lengths(), (std::vector<int>{4, 3, 1}));
  EXPECT_TRUE(scattering_data(state("1111")).empty());
  EXPECT_EQ(soliton_content(state("1111")), std::vector<int>{});
  EXPECT_THROW(scattering_data(state("2111")), not_highest);
}

TEST(Scattering, ModesAdvanceWithTime) {
  // Between collisions each soliton's mode grows by its length per step.
  const auto trace = evolve_trace(state(kRows[0]), 10, 7);
  std::size_t steady = 0;
  for (std::size_t t = 1; t < trace.size(); ++t) {
    const auto before = scattering_data(trace[t - 1]);
    const auto after = scattering_data(trace[t]);
    ASSERT_EQ(after.size(), before.size());
    if (strip_modes(after) != strip_modes(before)) continue;
    ++steady;
    for (std::size_t i = 0; i < after.size(); ++i)
      EXPECT_EQ(after[i].mode - before[i].mode, after[i].element.length());
  }
  EXPECT_EQ(steady, 6u);
  EXPECT_EQ(to_string(scattering_data(trace[4])), "2222:20*233:21*4:21");
  EXPECT_EQ(to_string(scattering_data(trace[7])), "2:24*223:29*2234:33");
}

TEST(InverseScattering, RebuildsStates) {
  const auto rebuilt = inverse_scattering(thirteen());
  EXPECT_EQ(rebuilt.format(), "1111223214322");
  // The table row is the same state behind sixteen more vacuum boxes.
  EXPECT_EQ(kRows[4].substr(16, 13), rebuilt.format());
  EXPECT_EQ(inverse_scattering(RiggedConfiguration::vacuum(2, {1, 1, 1})).format(), "111");
  EXPECT_THROW(inverse_scattering(RiggedConfiguration::vacuum(2, {2})), precondition_error);

  const auto t4 = state(kRows[4]);
  const auto rc = classical_path_to_rc(t4.word());
  EXPECT_EQ(inverse_scattering(rc), t4);
  EXPECT_EQ(scattering_data(inverse_scattering(rc)), scattering_data(t4));
}

TEST(InverseScattering, LeadingVacuumShiftsFirstRiggings) {
  auto rc = classical_path_to_rc(state(kRows[4]).word());
  EXPECT_EQ(rc.level(1).mu, (std::vector<int>{4, 3, 1}));
  EXPECT_EQ(rc.level(1).riggings, (std::vector<int>{16, 17, 20}));
  EXPECT_EQ(rc.level(2).riggings, (std::vector<int>{0, 0}));
}

TEST(ActionAngle, LinearFlow) {
  const auto start = state(kRows[0]);
  for (int l : {1, 2, 3, infinite_carrier(start)}) {
    const auto report = action_angle_report(start, l, 7);
    EXPECT_TRUE(report.ok()) << (report.ok() ? "" : report.violations.front());
    ASSERT_EQ(report.rows.size(), 8u);
    const auto& j0 = report.rows[0].levels[0];
    const auto& j7 = report.rows[7].levels[0];
    EXPECT_EQ(j0.mu, (std::vector<int>{4, 3, 1}));
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ(j7.riggings[i] - j0.riggings[i], 7 * std::min(l, j0.mu[i]));
  }
  EXPECT_TRUE(action_angle_report(state("111"), 2, 3).ok());
}

TEST(ActionAngle, RandomStates) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_highest(rng, 1 + trial % 3, 12);
    for (int l : {1, 2, infinite_carrier(s)}) ASSERT_TRUE(action_angle_report(s, l, 4).ok());
  }
}
