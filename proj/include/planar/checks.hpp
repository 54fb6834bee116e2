// The acceptance suite: every criterion is implemented as a named check
// with its tolerance pinned in code (all exact identities), runnable from
// the test binary and from the command line driver.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planar/exec.hpp"

namespace planar {

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// ids run 1..12; throws on unknown id
CheckResult run_acceptance_check(int id, uint64_t seed = 1,
                                 Exec exec = Exec::Parallel);
std::vector<CheckResult> run_acceptance_checks(uint64_t seed = 1,
                                               Exec exec = Exec::Parallel);

}  // namespace planar
