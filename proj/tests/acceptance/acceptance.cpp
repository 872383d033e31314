#include <cstdio>
#include <map>

#include "kms/checks.hpp"

int main() {
  // wall-clock budgets in seconds where a criterion sets one
  const std::map<int, double> budget{{1, 10.0}, {2, 30.0}, {5, 60.0}};
  int failed = 0;
  for (const auto& r : kms::checks::run_suite()) {
    bool ok = r.passed;
    std::string note;
    if (const auto it = budget.find(r.id); it != budget.end() && r.seconds > it->second) {
      ok = false;
      note = " over budget";
    }
    std::printf("%s criterion %2d: %s (%.3fs)%s\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, note.c_str());
    if (!r.passed) std::printf("  %s\n", r.detail.dump().c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kms::checks::suite().size()) - failed, kms::checks::suite().size());
  return failed == 0 ? 0 : 1;
}
