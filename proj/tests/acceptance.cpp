// Acceptance suite: every criterion at full scale, one line each.

#include "wreathkit/selftest.hpp"

#include <iostream>

int main() {
  using namespace wreathkit;
  SelftestOptions options;
  options.scale = Scale::kFull;
  int failed = 0;
  for (const auto& c : criteria()) {
    const CriterionResult r = run_criterion(c, options);
    std::cout << format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (criteria().size() - failed) << "/" << criteria().size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
