#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kkr/notation.hpp"
#include "kkr/partitions.hpp"
#include "kkr/rigged_config.hpp"
#include "oracles.hpp"

using namespace kkr;

namespace {

RiggedConfiguration rank3() {
  return RiggedConfiguration(3, {3, 2, 1, 1, 1, 1, 1},
                             {{{2, 2, 1, 1}, {0, 0, 0, 1}}, {{2, 1}, {1, 0}}, {{1}, {0}}});
}

RiggedConfiguration thirteen() {
  return RiggedConfiguration(3, std::vector<int>(13, 1),
                             {{{4, 3, 1}, {0, 1, 4}}, {{2, 1}, {0, 0}}, {{1}, {0}}});
}

std::size_t highest_paths(int n, const std::vector<int>& lambda) {
  std::size_t count = 0;
  std::vector<CrystalElement> cur;
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == lambda.size()) {
      count += oracle::lattice_highest(TensorWord(n, 0, cur));
      return;
    }
    for (const auto& x : all_elements(n, lambda[i])) {
      cur.push_back(x);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST(Partitions, Counts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(partitions(n).size(), p[static_cast<std::size_t>(n)]);
  EXPECT_EQ(partitions(4).front(), (std::vector<int>{4}));
  EXPECT_EQ(partitions(4).back(), (std::vector<int>{1, 1, 1, 1}));
  int seqs = 0;
  for_each_weakly_increasing(2, 0, 2, [&](const std::vector<int>&) { ++seqs; });
  EXPECT_EQ(seqs, 6);
}

TEST(RiggedConfiguration, StructuralChecks) {
  EXPECT_THROW(RiggedConfiguration(0, {1}, {}), invalid_rc);
  EXPECT_THROW(RiggedConfiguration(2, {1}, {{{}, {}}}), invalid_rc);
  EXPECT_THROW(RiggedConfiguration(1, {1}, {{{1}, {}}}), invalid_rc);
  EXPECT_THROW(RiggedConfiguration(1, {0}, {{{}, {}}}), invalid_rc);
  EXPECT_THROW(RiggedConfiguration(1, {2}, {{{0}, {0}}}), invalid_rc);
}

TEST(RiggedConfiguration, ColumnArea) {
  const auto rc = rank3();
  EXPECT_EQ(rc.column_area(1, 1), 4);
  EXPECT_EQ(thirteen().column_area(1, 2), 5);
  EXPECT_EQ(rc.column_area(4, 3), 0);
  EXPECT_EQ(RiggedConfiguration::vacuum(2, {3}).column_area(2, 5), 0);
}

TEST(RiggedConfiguration, Vacancy) {
  EXPECT_EQ(thirteen().vacancy(1, 1), 9);
  EXPECT_EQ(rank3().vacancy(2, 1), 1);
  EXPECT_EQ(rank3().vacancy(1, 2), 0);
  EXPECT_EQ(rank3().vacancy(3, 1), 0);
  const auto vac = RiggedConfiguration::vacuum(2, std::vector<int>(5, 1));
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(vac.vacancy(1, j), 5);
}

TEST(Validate, Examples) {
  EXPECT_FALSE(validate(thirteen()));
  EXPECT_FALSE(validate(rank3()));
  const auto neg = validate(RiggedConfiguration(1, {1, 1, 1}, {{{1}, {-1}}}));
  ASSERT_TRUE(neg);
  EXPECT_EQ(neg->level, 1);
  EXPECT_EQ(neg->length, 1);
  const auto over = validate(RiggedConfiguration(1, {1}, {{{1}, {0}}}));
  ASSERT_TRUE(over);
  EXPECT_NE(over->message.find("vacancy"), std::string::npos);
  EXPECT_THROW(require_valid(RiggedConfiguration(1, {1}, {{{1}, {0}}})), invalid_rc);
}

TEST(Validate, CompositionOrderMatters) {
  // Equal-length riggings must increase in the given row order.
  const RiggedConfiguration bad(1, std::vector<int>(10, 1), {{{1, 2, 1}, {2, 0, 1}}}, true);
  const auto v = validate(bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rows, (std::vector<std::size_t>{0, 2}));
  const RiggedConfiguration good(1, std::vector<int>(10, 1), {{{1, 2, 1}, {1, 0, 2}}}, true);
  EXPECT_FALSE(validate(good));
  EXPECT_EQ(good.as_partitions().level(1).mu, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(good.as_partitions().level(1).riggings, (std::vector<int>{0, 1, 2}));
}

TEST(Validate, InvariantUnderEqualRowPermutation) {
  const RiggedConfiguration a(1, std::vector<int>(10, 1), {{{1, 2, 1}, {2, 0, 1}}});
  const RiggedConfiguration b(1, std::vector<int>(10, 1), {{{1, 1, 2}, {1, 2, 0}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(validate(a).has_value(), validate(b).has_value());
}

TEST(Truncation, DropsLowerLevels) {
  const auto t = rank3().truncated(1);
  EXPECT_EQ(t.rank(), 2);
  EXPECT_EQ(t.mu0(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(t.level(1).mu, (std::vector<int>{2, 1}));
  EXPECT_FALSE(validate(t));
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_rcs(1, {1, 1}, 10).size(), 2u);
  const auto one = enumerate_rcs(1, {1}, 10);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.front().level(1).mu.empty());
  EXPECT_THROW(enumerate_rcs(2, {4, 3}, 6), capacity_exceeded);
}

TEST(Enumerate, CountsMatchHighestPaths) {
  for (int n = 1; n <= 3; ++n)
    for (int size = 1; size <= 5; ++size)
      for (const auto& lambda : partitions(size)) {
        const auto rcs = enumerate_rcs(n, lambda, size);
        std::set<std::string> distinct;
        for (const auto& rc : rcs) {
          EXPECT_FALSE(validate(rc));
          std::string key;
          for (const auto& lv : rc.levels()) {
            for (int x : lv.mu) key += std::to_string(x) + ",";
            key += "/";
            for (int x : lv.riggings) key += std::to_string(x) + ",";
            key += "|";
          }
          distinct.insert(key);
        }
        EXPECT_EQ(distinct.size(), rcs.size());
        EXPECT_EQ(rcs.size(), highest_paths(n, lambda)) << "n=" << n;
      }
}

TEST(Enumerate, CompositionShapes) {
  // mu0 order does not change which levels are admissible.
  EXPECT_EQ(enumerate_rcs(2, {1, 3, 2}, 6).size(), enumerate_rcs(2, {3, 2, 1}, 6).size());
}

TEST(RenderAscii, Layout) {
  const std::string expected =
      "mu(0)\n"
      "  [][][]\n"
      "  [][]\n"
      "  []\n  []\n  []\n  []\n  []\n"
      "mu(1)\n"
      "  0 [][] 0\n"
      "  0 [][] 0\n"
      "  1 [] 0\n"
      "  1 [] 1\n"
      "mu(2)\n"
      "  1 [][] 1\n"
      "  1 [] 0\n"
      "mu(3)\n"
      "  0 [] 0\n";
  EXPECT_EQ(render_ascii(rank3()), expected);
  EXPECT_EQ(render_ascii(RiggedConfiguration::vacuum(2, {})), "mu(0)\nmu(1)\nmu(2)\n");
  const auto big = render_ascii(thirteen());
  EXPECT_NE(big.find("  9 [] 4\n"), std::string::npos);
  EXPECT_NE(big.find("  0 [][][][] 0\n"), std::string::npos);
  EXPECT_NE(render_ascii(rank3(), true).find("\x1b["), std::string::npos);
}
