#pragma once

// JSON form of a rigged configuration:
//
//   {"n":3,"mu0":[3,2,1,1,1,1,1],
//    "levels":[{"mu":[2,2,1,1],"J":[0,0,0,1]},{"mu":[2,1],"J":[1,0]},{"mu":[1],"J":[0]}]}
//
// A configuration in composition mode carries "composition": true.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kkr/error.hpp"
#include "kkr/rigged_config.hpp"

namespace kkr {

using json = nlohmann::ordered_json;

inline json to_json(const RiggedConfiguration& rc) {
  json j;
  j["n"] = rc.rank();
  j["mu0"] = rc.mu0();
  json levels = json::array();
  for (const auto& lv : rc.levels())
    levels.push_back(json{{"mu", lv.mu}, {"J", lv.riggings}});
  j["levels"] = std::move(levels);
  if (rc.composition()) j["composition"] = true;
  return j;
}

/// rank_override replaces (and must agree with, if present) the "n" field.
inline RiggedConfiguration rc_from_json(const json& j,
                                        std::optional<int> rank_override = {}) {
  try {
    if (!j.is_object()) throw parse_error("rigged configuration must be an object");
    int rank = 0;
    if (j.contains("n")) rank = j.at("n").get<int>();
    if (rank_override) {
      if (j.contains("n") && rank != *rank_override)
        throw parse_error("rank override " + std::to_string(*rank_override) +
                          " disagrees with n = " + std::to_string(rank));
      rank = *rank_override;
    } else if (!j.contains("n")) {
      throw parse_error("missing field \"n\"");
    }
    auto mu0 = j.at("mu0").get<std::vector<int>>();
    std::vector<RiggedLevel> levels;
    for (const auto& lv : j.at("levels")) {
      RiggedLevel level{lv.at("mu").get<std::vector<int>>(),
                        lv.at("J").get<std::vector<int>>()};
      levels.push_back(std::move(level));
    }
    const bool composition = j.value("composition", false);
    return RiggedConfiguration(rank, std::move(mu0), std::move(levels),
                               composition);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed rigged configuration JSON: ") +
                      e.what());
  }
}

inline std::string render_json(const RiggedConfiguration& rc, int indent = -1) {
  return to_json(rc).dump(indent);
}

inline RiggedConfiguration parse_rc_json(std::string_view text,
                                         std::optional<int> rank_override = {}) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return rc_from_json(j, rank_override);
}

}  // namespace kkr
