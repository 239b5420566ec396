// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <iostream>

#include "tinv/checks.hpp"

int main() {
  int failures = 0;
  std::cout << "acceptance criteria\n";
  for (const auto& r : tinv::run_acceptance_criteria()) {
    failures += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (expected " << r.expected << ", computed "
              << r.computed << ")\n";
  }
  std::cout << "supplementary checks\n";
  for (const auto& r : tinv::run_paper_checks()) {
    if (r.name.starts_with("AC")) continue;
    failures += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (expected " << r.expected << ", computed "
              << r.computed << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria pass\n" : std::to_string(failures) + " failing\n");
  return failures == 0 ? 0 : 1;
}
