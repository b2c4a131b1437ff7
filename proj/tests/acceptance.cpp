// Acceptance suite: runs every verification criterion on the full grid
// 1 <= q < p <= 8 and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>

#include "parry/verify.hpp"

int main() {
  parry::verify::Options opts;  // defaults are the acceptance parameters
  auto start = std::chrono::steady_clock::now();
  auto results = parry::verify::run_criteria(opts);
  bool ok = parry::verify::all_pass(results);
  for (const auto& res : results) {
    std::printf("[%s] %2d. %s (%zu checks)\n", res.pass ? "PASS" : "FAIL", res.id,
                res.title.c_str(), res.checks.size());
    if (!res.pass) {
      for (const auto& c : res.checks)
        if (!c.pass) std::printf("        failed: %s  %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  std::printf("%s in %llds\n", ok ? "acceptance suite passed" : "acceptance suite FAILED",
              static_cast<long long>(elapsed.count()));
  return ok ? 0 : 1;
}
