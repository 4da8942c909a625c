// kkr: command-line front end.
//
// Exit codes: 0 success, 1 invalid configuration or non-highest path,
// 2 usage or parse error, 3 selftest failure, 4 action-angle violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kkr/kkr.hpp"
#include "kkr/selftest.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kSelftest = 3, kViolation = 4 };

bool color_enabled() {
  const char* v = std::getenv("KKR_COLOR");
  return v && std::string(v) == "1";
}

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw kkr::parse_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string csv_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------

struct Rc2PathArgs {
  std::string file;
  std::string engine = "vertex";
  std::optional<int> rank;
  bool trace = false;
};

int cmd_rc2path(const Rc2PathArgs& args) {
  const auto rc = kkr::parse_rc_json(read_input(args.file), args.rank);
  kkr::require_valid(rc);
  if (args.engine == "classical") {
    if (args.trace) std::cerr << "note: --trace applies to the vertex engine only\n";
    std::cout << kkr::to_string(kkr::classical_rc_to_path(rc)) << "\n";
    return kOk;
  }
  if (!args.trace) {
    std::cout << kkr::to_string(kkr::rc_to_path(rc)) << "\n";
    return kOk;
  }
  const auto trace = kkr::rc_to_path_traced(rc);
  for (const auto& stage : trace.stages) {
    const auto a = std::to_string(stage.level);
    std::cout << "p(" << a << ") = " << kkr::to_string(stage.input) << "\n";
    std::cout << "C_" << a << " = " << kkr::to_string(stage.ordering.canonical())
              << "  modes " << list(stage.ordering.modes) << ", "
              << stage.ordering.forms.size() << " normal form"
              << (stage.ordering.forms.size() == 1 ? "" : "s") << ", "
              << stage.ordering.reorderings << " reorderings\n";
    for (std::size_t i = 1; i < stage.ordering.forms.size(); ++i)
      std::cout << "      " << kkr::to_string(stage.ordering.forms[i]) << "\n";
  }
  for (const auto& w : trace.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << kkr::to_string(trace.path) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct Path2RcArgs {
  int rank = 0;
  std::string path;
  std::string state;
  bool ascii = false;
  bool pretty = false;
};

int cmd_path2rc(const Path2RcArgs& args) {
  const auto word = args.state.empty()
                        ? kkr::parse_word(args.path, args.rank)
                        : kkr::BoxBallState::parse(args.state, args.rank).word();
  const auto rc = kkr::classical_path_to_rc(word);
  std::cout << kkr::render_json(rc, args.pretty ? 2 : -1) << "\n";
  if (args.ascii) std::cout << kkr::render_ascii(rc, color_enabled());
  return kOk;
}

// ---------------------------------------------------------------------------

struct BbsArgs {
  std::string action;
  int rank = 0;
  std::string state;
  std::string carrier = "inf";
  int steps = 7;
  int margin = -1;
  std::string format = "ascii";
};

int carrier_of(const BbsArgs& args, const kkr::BoxBallState& state) {
  if (args.carrier == "inf") return kkr::infinite_carrier(state);
  const int l = kkr::detail::parse_int(args.carrier, "carrier capacity");
  if (l < 1) throw kkr::parse_error("carrier capacity must be positive or 'inf'");
  return l;
}

int bbs_evolve(const BbsArgs& args, const kkr::BoxBallState& start) {
  const int l = carrier_of(args, start);
  const auto trace = kkr::evolve_trace(start, l, args.steps, args.margin);
  if (args.format == "json") {
    kkr::json out;
    out["rank"] = args.rank;
    out["carrier"] = l;
    out["states"] = kkr::json::array();
    for (const auto& s : trace) out["states"].push_back(s.format());
    std::cout << out.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "t,state\n";
    for (std::size_t t = 0; t < trace.size(); ++t)
      std::cout << t << "," << trace[t].format() << "\n";
  } else {
    for (std::size_t t = 0; t < trace.size(); ++t)
      std::cout << "t=" << t << ": " << trace[t].format() << "\n";
  }
  return kOk;
}

int bbs_scatter(const BbsArgs& args, const kkr::BoxBallState& state) {
  const auto rc = kkr::classical_path_to_rc(state.word());
  const auto solitons = kkr::intermediate_path(rc, 1);
  const auto data = kkr::map_c(1, rc, solitons);
  if (args.format == "json") {
    kkr::json out;
    out["rank"] = args.rank;
    out["content"] = rc.level(1).mu;
    out["solitons"] = kkr::to_string(solitons);
    out["scattering"] = kkr::to_string(data);
    out["modes"] = kkr::modes_of(data);
    std::cout << out.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "soliton,length,mode\n";
    for (const auto& f : data)
      std::cout << kkr::to_string(f.element) << "," << f.element.length() << ","
                << f.mode << "\n";
  } else {
    std::cout << "content: " << list(rc.level(1).mu) << "\n";
    std::cout << "solitons: " << kkr::to_string(solitons) << "\n";
    std::cout << "scattering: " << kkr::to_string(data) << "\n";
  }
  return kOk;
}

int bbs_action_angle(const BbsArgs& args, const kkr::BoxBallState& start) {
  const int l = carrier_of(args, start);
  const auto report = kkr::action_angle_report(start, l, args.steps);
  if (args.format == "json") {
    kkr::json out;
    out["carrier"] = l;
    out["rows"] = kkr::json::array();
    for (const auto& row : report.rows) {
      kkr::json r;
      r["t"] = row.step;
      r["sites"] = row.sites;
      r["levels"] = kkr::json::array();
      for (const auto& lv : row.levels)
        r["levels"].push_back(kkr::json{{"mu", lv.mu}, {"J", lv.riggings}});
      out["rows"].push_back(std::move(r));
    }
    out["violations"] = report.violations;
    out["ok"] = report.ok();
    std::cout << out.dump() << "\n";
  } else if (args.format == "csv") {
    std::cout << "t,sites,level,mu,J\n";
    for (const auto& row : report.rows)
      for (std::size_t a = 0; a < row.levels.size(); ++a)
        std::cout << row.step << "," << row.sites << "," << a + 1 << ","
                  << csv_list(row.levels[a].mu) << ","
                  << csv_list(row.levels[a].riggings) << "\n";
  } else {
    std::cout << "carrier " << l << "\n";
    for (const auto& row : report.rows) {
      std::cout << "t=" << row.step << ": sites=" << row.sites;
      for (std::size_t a = 0; a < row.levels.size(); ++a)
        std::cout << "  mu(" << a + 1 << ")=" << list(row.levels[a].mu) << " J("
                  << a + 1 << ")=" << list(row.levels[a].riggings);
      std::cout << "\n";
    }
    std::cout << (report.ok() ? "action-angle: ok" : "action-angle: VIOLATED") << "\n";
  }
  for (const auto& v : report.violations) std::cerr << "violation: " << v << "\n";
  return report.ok() ? kOk : kViolation;
}

int cmd_bbs(const BbsArgs& args) {
  const auto state = kkr::BoxBallState::parse(args.state, args.rank);
  if (args.action == "evolve") return bbs_evolve(args, state);
  if (args.action == "scatter") return bbs_scatter(args, state);
  return bbs_action_angle(args, state);
}

// ---------------------------------------------------------------------------

struct NormalOrderArgs {
  int rank = 0;
  int restriction = 0;
  std::string word;
};

int cmd_normal_order(const NormalOrderArgs& args) {
  const auto s = kkr::parse_affine_word(args.word, args.rank, args.restriction);
  const auto no = kkr::normal_order(s);
  std::cout << "reorderings: " << no.reorderings << "\n";
  std::cout << "chain:";
  for (std::size_t i = no.chain.size(); i-- > 0;)
    std::cout << " |S_" << i + 1 << "|=" << no.chain[i];
  std::cout << "\nmodes: " << list(no.modes) << "\n";
  for (const auto& f : no.forms) std::cout << kkr::to_string(f) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct SelftestArgs {
  std::string level = "quick";
  std::string filter;
};

int cmd_selftest(const SelftestArgs& args) {
  const auto outcomes = kkr::run_checks(args.level == "full", args.filter);
  if (outcomes.empty()) {
    std::cerr << "no check named '" << args.filter << "'\n";
    return kUsage;
  }
  bool ok = true;
  for (const auto& o : outcomes) {
    ok &= o.result.ok;
    std::cout << (o.result.ok ? "PASS " : "FAIL ") << std::left << std::setw(28)
              << o.check->name << std::right << std::setw(8) << o.result.cases
              << " cases  " << std::fixed << std::setprecision(3) << o.seconds
              << " s";
    if (!o.result.detail.empty()) std::cout << "  " << o.result.detail;
    std::cout << "\n";
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? kOk : kSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigged configurations, the KKR bijection and box-ball systems"};
  app.require_subcommand(1);

  Rc2PathArgs rc2path;
  auto* rc2path_cmd = app.add_subcommand("rc2path", "Map a rigged configuration to its path");
  rc2path_cmd->add_option("--rc", rc2path.file, "Configuration JSON file ('-' for stdin)")
      ->required();
  rc2path_cmd->add_option("--engine", rc2path.engine, "vertex or classical")
      ->check(CLI::IsMember({"vertex", "classical"}));
  rc2path_cmd->add_option("--rank", rc2path.rank, "Rank n (overrides the JSON field)");
  rc2path_cmd->add_flag("--trace", rc2path.trace, "Print every p(a) and C_a");

  Path2RcArgs path2rc;
  auto* path2rc_cmd = app.add_subcommand("path2rc", "Map a highest path to its rigged configuration");
  path2rc_cmd->add_option("--rank", path2rc.rank, "Rank n")->required();
  auto* path_opt = path2rc_cmd->add_option("--path", path2rc.path, "Word such as 111*22*3");
  auto* state_opt = path2rc_cmd->add_option("--state", path2rc.state, "Digit string of single boxes");
  path_opt->excludes(state_opt);
  path2rc_cmd->add_flag("--ascii", path2rc.ascii, "Also draw the Young diagrams");
  path2rc_cmd->add_flag("--pretty", path2rc.pretty, "Indent the JSON");

  BbsArgs bbs;
  auto* bbs_cmd = app.add_subcommand("bbs", "Box-ball system");
  bbs_cmd->add_option("action", bbs.action, "evolve, scatter or action-angle")
      ->required()
      ->check(CLI::IsMember({"evolve", "scatter", "action-angle"}));
  bbs_cmd->add_option("--rank", bbs.rank, "Rank n")->required();
  bbs_cmd->add_option("--state", bbs.state, "Digit string, vacuum letter 1")->required();
  bbs_cmd->add_option("--carrier", bbs.carrier, "Carrier capacity l, or 'inf'");
  bbs_cmd->add_option("--steps", bbs.steps, "Number of time steps")->check(CLI::NonNegativeNumber);
  bbs_cmd->add_option("--margin", bbs.margin, "Trailing vacuum kept after each step (default 2l)");
  bbs_cmd->add_option("--format", bbs.format, "ascii, json or csv")
      ->check(CLI::IsMember({"ascii", "json", "csv"}));

  NormalOrderArgs normal;
  auto* normal_cmd = app.add_subcommand("normal-order", "Normal ordered forms of an affine word");
  normal_cmd->add_option("--rank", normal.rank, "Rank n")->required();
  normal_cmd->add_option("--restriction", normal.restriction, "Letters <= a are excluded");
  normal_cmd->add_option("--word", normal.word, "Affine word such as 1223:5*34:8*1:6")->required();

  SelftestArgs selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in verification suite");
  selftest_cmd->add_option("--level", selftest.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  selftest_cmd->add_option("--filter", selftest.filter, "Run only the named check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rc2path_cmd) return cmd_rc2path(rc2path);
    if (*path2rc_cmd) {
      if (!*path_opt && !*state_opt) {
        std::cerr << "path2rc needs --path or --state\n";
        return kUsage;
      }
      return cmd_path2rc(path2rc);
    }
    if (*bbs_cmd) return cmd_bbs(bbs);
    if (*normal_cmd) return cmd_normal_order(normal);
    if (*selftest_cmd) return cmd_selftest(selftest);
  } catch (const kkr::invalid_rc& e) {
    std::cerr << "invalid rigged configuration: " << e.what() << "\n";
    return kInvalid;
  } catch (const kkr::not_highest& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const kkr::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
