// Acceptance runner: one line per criterion, nonzero exit if any criterion
// fails its check or its time limit.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "kkr/selftest.hpp"

int main() {
  const std::map<int, std::pair<const char*, double>> criteria = {
      {1, {"vertex operator fixture and trace", 1.0}},
      {2, {"direct scattering fixture", 1.0}},
      {3, {"box-ball table and soliton content", 1.0}},
      {4, {"normal ordering fixture", 1.0}},
      {5, {"vertex and classical engines agree (n<=3, |mu0|<=6)", 60.0}},
      {6, {"R, energy and vacuum-length properties", 60.0}},
      {7, {"action-angle flow for l in {1, 2, inf}", 5.0}},
      {8, {"normal form choice independence", 120.0}},
  };
  const auto outcomes = kkr::run_checks(true);
  bool all_ok = true;
  for (const auto& [number, info] : criteria) {
    const auto& [title, limit] = info;
    bool ok = true;
    double seconds = 0;
    std::size_t cases = 0;
    std::string detail;
    for (const auto& o : outcomes) {
      if (o.check->criterion != number) continue;
      seconds += o.seconds;
      cases += o.result.cases;
      if (!o.result.ok) {
        ok = false;
        if (detail.empty()) detail = o.check->name + ": " + o.result.detail;
      }
    }
    if (ok && seconds > limit) {
      ok = false;
      detail = "time limit " + std::to_string(limit) + " s exceeded";
    }
    all_ok &= ok;
    std::printf("criterion %d: %s  %-55s %7zu cases %8.3f s (limit %.0f s)%s%s\n", number,
                ok ? "PASS" : "FAIL", title, cases, seconds, limit,
                detail.empty() ? "" : "  ", detail.c_str());
  }
  std::printf("%s\n", all_ok ? "acceptance: PASS" : "acceptance: FAIL");
  return all_ok ? 0 : 1;
}
