// Invariant suites shared by the `selftest` subcommand.
#ifndef FLATETA_SELFTEST_HPP_
#define FLATETA_SELFTEST_HPP_

#include <string>
#include <vector>

namespace flateta {

struct SuiteResult {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

std::vector<std::string> selftest_suite_names();
SuiteResult run_selftest_suite(const std::string& name);
std::vector<SuiteResult> run_selftest();

}  // namespace flateta

#endif
