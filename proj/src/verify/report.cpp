#include "addchow/verify/report.hpp"

#include <algorithm>

namespace addchow {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

void CheckBuilder::record(bool ok, const std::string& counterexample) {
  ++r_.total;
  if (ok) {
    ++r_.passed;
  } else if (r_.status != Status::Fail) {
    r_.status = Status::Fail;
    r_.detail = counterexample;
  }
}

void CheckBuilder::skip(const std::string& reason) {
  if (skip_reason_.empty()) skip_reason_ = reason;
}

void CheckBuilder::unsupported(const std::string& reason) {
  if (unsupported_++ == 0) unsupported_reason_ = reason;
}

void CheckBuilder::note(const std::string& text) {
  if (r_.status == Status::Fail) return;
  r_.detail += (r_.detail.empty() ? "" : "; ") + text;
}

CheckResult CheckBuilder::finish() const {
  CheckResult r = r_;
  if (unsupported_ > 0 && r.status != Status::Fail) {
    const std::string text = std::to_string(unsupported_) + " instances unsupported (" + unsupported_reason_ + ")";
    r.detail += (r.detail.empty() ? "" : "; ") + text;
  }
  if (r.status != Status::Fail && r.total == 0) r.status = Status::Skip;
  if (r.total == 0 && !skip_reason_.empty()) r.detail = skip_reason_ + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Status SuiteReport::status() const {
  if (std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; }))
    return Status::Fail;
  if (std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Skip; }))
    return Status::Skip;
  return Status::Pass;
}

std::string render_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  for (const auto& rep : reports) {
    out += "suite " + rep.suite + ": " + to_string(rep.status()) + "\n";
    for (const auto& c : rep.checks) {
      out += "  [" + to_string(c.status) + "] " + c.name + " (" + c.anchor + ")";
      if (c.total > 0) out += " " + std::to_string(c.passed) + "/" + std::to_string(c.total);
      out += "\n";
      if (!c.detail.empty()) {
        // Indent every line of multi-line details.
        std::string d = "      " + c.detail;
        for (std::size_t pos = 0; (pos = d.find('\n', pos)) != std::string::npos; pos += 7) d.insert(pos + 1, "      ");
        out += d + "\n";
      }
    }
  }
  return out;
}

nlohmann::json render_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"anchor", c.anchor},
                        {"status", to_string(c.status)},
                        {"passed", c.passed},
                        {"total", c.total},
                        {"detail", c.detail}});
    suites.push_back({{"suite", rep.suite}, {"status", to_string(rep.status())}, {"checks", checks}});
  }
  return {{"suites", suites}, {"exit_code", exit_code(reports)}};
}

int exit_code(const std::vector<SuiteReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.status() == Status::Fail; }) ? 1 : 0;
}

}  // namespace addchow
