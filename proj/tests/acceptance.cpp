// One line per acceptance criterion; exit status 0 iff every criterion passes.
#include <cstdio>
#include <map>
#include <thread>

#include "voalab/checks.hpp"

using namespace voalab;

namespace {

struct Criterion {
  const char* title;
  double budget_s;
};

const std::map<int, Criterion> kCriteria = {
    {1, {"mode-product table", 5}},
    {2, {"sigma action", 10}},
    {3, {"weight-9 primary and form values", 30}},
    {4, {"u16 extraction and weight-16 membership", 60}},
    {5, {"weight-20/22 decompositions and Gram system", 300}},
    {6, {"coefficient functional and ratio inequality", 300}},
    {7, {"twisted sectors", 60}},
    {8, {"module tables and classification", 60}},
    {9, {"character suite", 60}},
    {10, {"property suites", 120}},
};

}  // namespace

int main() {
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const Report rep = run_checks(select_checks({"all"}), Config{}, jobs);
  bool all_ok = true;
  for (const auto& [n, crit] : kCriteria) {
    int count = 0;
    double seconds = 0;
    std::string failing, findings;
    for (const auto& c : rep.checks) {
      if (c.criterion != n) continue;
      ++count;
      seconds += c.ms / 1000.0;
      if (c.status == Status::Fail) failing += " " + c.id;
      if (c.status == Status::Finding)
        findings += " " + c.id + " (computed " + c.computed + ", reference " + c.expected + ")";
    }
    const bool in_budget = seconds < crit.budget_s;
    const bool ok = count > 0 && failing.empty() && in_budget;
    all_ok = all_ok && ok;
    std::printf("%s criterion %2d: %s; %d checks, %.2f s of %.0f s budget", ok ? "PASS" : "FAIL", n, crit.title,
                count, seconds, crit.budget_s);
    if (!failing.empty()) std::printf("; failing:%s", failing.c_str());
    if (!in_budget) std::printf("; over budget");
    if (!findings.empty()) std::printf("; findings:%s", findings.c_str());
    std::printf("\n");
  }
  for (const auto& c : rep.checks)
    if (c.criterion == 0 && c.status != Status::Pass) {
      std::printf("FAIL meta-check %s: %s\n", c.id.c_str(), c.computed.c_str());
      all_ok = false;
    }
  return all_ok ? 0 : 1;
}
