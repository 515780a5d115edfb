#ifndef ADDCHOW_VERIFY_SUITES_HPP
#define ADDCHOW_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "addchow/verify/report.hpp"

namespace addchow {

/// Overrides for a verification run; zero or empty keeps the suite default.
struct VerifyConfig {
  std::string field;
  int n = 0;
  int count = 0;
  std::uint64_t seed = 1;
};

/// lemma4_1, prop4_2, lemma2_5, prop4_4, lemma5_1, theorem5_2, challenge, degeneration.
const std::vector<std::string>& suite_names();

/// One suite, or every suite for "all". Throws InvalidArgument for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyConfig& cfg);

}  // namespace addchow

#endif  // ADDCHOW_VERIFY_SUITES_HPP
