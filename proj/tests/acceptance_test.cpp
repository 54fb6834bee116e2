// Acceptance suite runner: one line per criterion, nonzero exit on any
// failure. Usage: acceptance_tests [seed].
#include <cstdio>
#include <cstdlib>

#include "planar/checks.hpp"

int main(int argc, char** argv) {
  uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  bool all_pass = true;
  double total = 0;
  for (int id = 1; id <= 12; ++id) {
    planar::CheckResult r = planar::run_acceptance_check(id, seed);
    all_pass = all_pass && r.pass;
    total += r.seconds;
    std::printf("[%s] %2d  %-62s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds);
    if (!r.pass) std::printf("       %s\n", r.details.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: 12 criteria in %.1fs\n",
              all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", total);
  return all_pass ? 0 : 1;
}
