#include <cstdio>

#include "chordweights/acceptance.hpp"

int main() {
  using namespace chordweights::acceptance;
  int failed = 0;
  for (const auto &c : criteria()) {
    const auto r = run_criterion(c);
    std::printf("[%s] criterion %2d: %s (%zu checked, %.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.checked, r.seconds);
    for (const auto &f : r.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria().size());
  return failed == 0 ? 0 : 1;
}
