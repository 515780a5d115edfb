#ifndef ADDCHOW_VERIFY_REPORT_HPP
#define ADDCHOW_VERIFY_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace addchow {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

/// One checked identity. passed/total count random instances; a fixed
/// identity has total 1. detail holds the first counterexample on failure
/// or a note (a recorded sign, a skip reason).
struct CheckResult {
  std::string name;
  std::string anchor;
  Status status = Status::Pass;
  int passed = 0;
  int total = 0;
  std::string detail;
};

/// Tallies instances of one identity; the first failure is kept.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string anchor) {
    r_.name = std::move(name);
    r_.anchor = std::move(anchor);
  }
  void record(bool ok, const std::string& counterexample = {});
  /// Reason reported if no instance ends up recorded.
  void skip(const std::string& reason);
  /// An instance outside the implemented range (factoring or characteristic
  /// limits): neither passed nor failed, counted in the note.
  void unsupported(const std::string& reason);
  void note(const std::string& text);
  CheckResult finish() const;

 private:
  CheckResult r_;
  std::string skip_reason_;
  int unsupported_ = 0;
  std::string unsupported_reason_;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Fail if any check failed, Skip if all skipped, else Pass.
  Status status() const;
};

/// `[PASS] name (anchor) 50/50` lines per check, grouped by suite.
std::string render_text(const std::vector<SuiteReport>& reports);
nlohmann::json render_json(const std::vector<SuiteReport>& reports);
/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

}  // namespace addchow

#endif  // ADDCHOW_VERIFY_REPORT_HPP
