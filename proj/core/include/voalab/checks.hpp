#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace voalab {

struct Config {
  int max_weight = 24;     // character truncation order
  int eigen_weight = 12;   // sigma-eigenspace checks up to this weight
  int twisted_weight = 3;  // twisted-sector checks up to this twisted weight
  std::uint64_t seed = 20240611;
};

enum class Status { Pass, Fail, Finding };
std::string status_name(Status s);

struct CheckOutcome {
  Status status = Status::Fail;
  std::string computed;
  std::string expected;
  std::string note;
};

class Workbench;

struct CheckSpec {
  std::string id;
  std::string description;
  std::vector<std::string> topics;  // coverage tags
  int criterion = 0;                // acceptance group, 0 when none
  bool heavy = false;
  std::function<CheckOutcome(Workbench&)> run;
};

// All registered checks, sorted by id.
const std::vector<CheckSpec>& check_registry();
// Topics every registry must cover.
const std::vector<std::string>& required_topics();

struct CheckResult {
  std::string id;
  int criterion = 0;
  Status status = Status::Fail;
  std::string computed;
  std::string expected;
  std::string note;
  double ms = 0;
};

struct Report {
  std::string version;
  Config config;
  std::vector<CheckResult> checks;  // sorted by id
  int pass = 0, fail = 0, finding = 0;
};

// Selection entries are check ids, topic tags, "criterion:N" or "all".
std::vector<std::string> select_checks(const std::vector<std::string>& selection);
Report run_checks(const std::vector<std::string>& ids, const Config& config, int jobs = 1);

const char* tool_version();

}  // namespace voalab
