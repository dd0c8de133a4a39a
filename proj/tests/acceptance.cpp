// One line per acceptance criterion; a criterion fails when its battery fails
// or runs past its time budget.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "flagpar/suite.hpp"

int main() {
  bool all = true;
  for (const auto& b : flagpar::batteries()) {
    auto t0 = std::chrono::steady_clock::now();
    std::pair<bool, std::string> r;
    try {
      r = b.run();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.first && secs < b.budget_seconds;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, b.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << b.id << " " << b.name << ": " << r.second << " (" << timing
              << ")" << (r.first && !ok ? " over budget" : "") << std::endl;
  }
  return all ? 0 : 1;
}
