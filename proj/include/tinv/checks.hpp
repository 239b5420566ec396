#pragma once

// Reproduction harness: every published example and every acceptance
// property as a named check with expected and computed values.

#include <optional>
#include <string>
#include <vector>

#include "tinv/classify.hpp"

namespace tinv {

struct CheckReport {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;

  CheckReport(std::string name_, std::string expected_, std::string computed_)
      : name(std::move(name_)),
        expected(std::move(expected_)),
        computed(std::move(computed_)),
        pass(expected == computed) {}
};

/// Runs every check (independent checks in parallel); the result order is
/// fixed. A check that throws is reported as failed with the message as its
/// computed value.
std::vector<CheckReport> run_paper_checks();

/// Only the numbered acceptance criteria, named "AC01 ..." through "AC12 ...".
std::vector<CheckReport> run_acceptance_criteria();

namespace oracle {

/// Searches all bijections sigma of G with sigma(0) = 0 for a group
/// automorphism with q1 = q2 o sigma. Independent of
/// AutomorphismEnumerator; intended for |G| <= 8.
std::optional<std::vector<std::size_t>> iso_by_bijection(const QuadraticLinkingFunction& q1,
                                                         const QuadraticLinkingFunction& q2);

}  // namespace oracle

}  // namespace tinv
