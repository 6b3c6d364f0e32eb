#include "voalab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace voalab {

namespace {

std::string clip(const std::string& s, std::size_t n) {
  return s.size() <= n ? s : s.substr(0, n - 3) + "...";
}

}  // namespace

std::string report_text(const Report& r) {
  std::size_t wid = 2;
  for (const auto& c : r.checks) wid = std::max(wid, c.id.size());
  std::ostringstream out;
  char buf[64];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%9.1f ms", c.ms);
    out << c.id << std::string(wid + 2 - c.id.size(), ' ') << status_name(c.status)
        << std::string(9 - status_name(c.status).size(), ' ') << buf << "  " << clip(c.computed, 160) << "\n";
    if (c.status != Status::Pass) {
      out << std::string(wid + 2, ' ') << "expected: " << clip(c.expected, 160) << "\n";
      if (!c.note.empty()) out << std::string(wid + 2, ' ') << "note: " << c.note << "\n";
    }
  }
  out << r.pass << " passed, " << r.fail << " failed, " << r.finding << (r.finding == 1 ? " finding\n" : " findings\n");
  return out.str();
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["config"] = {{"max_weight", r.config.max_weight},
                 {"eigen_weight", r.config.eigen_weight},
                 {"twisted_weight", r.config.twisted_weight},
                 {"seed", r.config.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e = {{"id", c.id},          {"status", status_name(c.status)},
                                {"computed", c.computed}, {"expected", c.expected},
                                {"ms", c.ms}};
    if (!c.note.empty()) e["note"] = c.note;
    j["checks"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"finding", r.finding}};
  return j.dump(2) + "\n";
}

}  // namespace voalab
