#ifndef QW_VERIFY_HPP
#define QW_VERIFY_HPP

#include <string>
#include <vector>

namespace qw {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

inline const char* default_fixture_dir() {
#ifdef QW_FIXTURE_DIR
  return QW_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

// The ten acceptance checks, in order. All exact; no tolerances.
std::vector<CheckResult> acceptance_criteria(const std::string& fixture_dir);

// CLI verification suites (regroupings of the checks above).
std::vector<CheckResult> suite_main(const std::string& fixture_dir);
std::vector<CheckResult> suite_weights();
std::vector<CheckResult> suite_whittaker(const std::string& fixture_dir);
std::vector<CheckResult> suite_corollary(const std::string& fixture_dir);

}  // namespace qw

#endif
