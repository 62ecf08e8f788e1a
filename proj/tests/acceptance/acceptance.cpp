#include "hvir/checks.hpp"

#include <cstdio>

int main() {
  int failed = 0;
  for (int id = 1; id <= hvir::kCheckCount; ++id) {
    const hvir::CheckResult r = hvir::run_check(id);
    std::printf("AC%-2d %s  %s  [%s] (%.3f s)\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
    if (!r.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", hvir::kCheckCount - failed, hvir::kCheckCount);
  return failed == 0 ? 0 : 1;
}
