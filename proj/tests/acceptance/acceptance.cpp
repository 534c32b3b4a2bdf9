// One PASS/FAIL line per acceptance criterion, with its wall-clock time.

#include "flipcalc/golden.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using flipcalc::golden::criteria;
  using flipcalc::golden::run_criterion;
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_criterion(c.id);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const flipcalc::golden::CheckReport* bad = nullptr;
    for (const auto& r : reports) {
      if (!r.pass && bad == nullptr) bad = &r;
    }
    const bool in_time = secs < c.time_limit;
    const bool pass = bad == nullptr && in_time && !reports.empty();
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %.3f s, limit %.1f s)\n", pass ? "PASS" : "FAIL",
                c.id, c.title.c_str(), reports.size(), secs, c.time_limit);
    if (bad != nullptr) {
      std::printf("     %s (%s): expected %s, computed %s\n", bad->name.c_str(), bad->inputs.c_str(),
                  bad->expected.c_str(), bad->computed.c_str());
    } else if (!in_time) {
      std::printf("     over the time limit\n");
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria().size()) - failed,
              criteria().size());
  return failed == 0 ? 0 : 1;
}
