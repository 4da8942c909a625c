#include <gtest/gtest.h>

#include "kkr/partitions.hpp"
#include "kkr/rc_json.hpp"

using namespace kkr;

namespace {
const char* kRank3 =
    R"({"n":3,"mu0":[3,2,1,1,1,1,1],"levels":[{"mu":[2,2,1,1],"J":[0,0,0,1]},{"mu":[2,1],"J":[1,0]},{"mu":[1],"J":[0]}]})";
}

TEST(RcJson, ParsesAndRendersCanonically) {
  const auto rc = parse_rc_json(kRank3);
  EXPECT_EQ(rc.rank(), 3);
  EXPECT_EQ(rc.level(2).riggings, (std::vector<int>{1, 0}));
  EXPECT_EQ(render_json(rc), kRank3);
}

TEST(RcJson, RoundTripOverEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : partitions(5))
      for (const auto& rc : enumerate_rcs(n, lambda, 5))
        EXPECT_EQ(parse_rc_json(render_json(rc)), rc);
}

TEST(RcJson, CompositionFlag) {
  const RiggedConfiguration rc(1, {1, 1, 1, 1}, {{{1, 2}, {0, 0}}}, true);
  const auto text = render_json(rc);
  EXPECT_NE(text.find("\"composition\":true"), std::string::npos);
  const auto back = parse_rc_json(text);
  EXPECT_TRUE(back.composition());
  EXPECT_EQ(back.level(1).mu, (std::vector<int>{1, 2}));
}

TEST(RcJson, RankOverride) {
  EXPECT_EQ(parse_rc_json(kRank3, 3).rank(), 3);
  EXPECT_THROW(parse_rc_json(kRank3, 2), parse_error);
  EXPECT_EQ(parse_rc_json(R"({"mu0":[1],"levels":[{"mu":[],"J":[]}]})", 1).rank(), 1);
}

TEST(RcJson, Errors) {
  EXPECT_THROW(parse_rc_json("{"), parse_error);
  EXPECT_THROW(parse_rc_json("[]"), parse_error);
  EXPECT_THROW(parse_rc_json(R"({"n":1,"levels":[]})"), parse_error);
  EXPECT_THROW(parse_rc_json(R"({"n":1,"mu0":["x"],"levels":[{"mu":[],"J":[]}]})"),
               parse_error);
  EXPECT_THROW(parse_rc_json(R"({"n":2,"mu0":[1],"levels":[{"mu":[],"J":[]}]})"),
               invalid_rc);
}
