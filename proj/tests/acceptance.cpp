// Acceptance sweep: one PASS/FAIL line per criterion, exit status 1 on any failure.
// Bounds: general sweeps n <= 5, d <= 3; two-letter checks to n = 7 (LR) and
// n = 6 (rigidity); cone check n <= 4 on the box |x_i| <= cone_box(n).

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "bkpuzzle/selfcheck.hpp"

int main(int argc, char** argv) {
  bkp::SweepBounds b;  // max_n 5, max_d 3
  b.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (argc > 1) b.jobs = std::atoi(argv[1]);
  int failed = 0;
  bkp::run_acceptance(b, [&](const bkp::CriterionResult& r) {
    std::cout << bkp::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 11 criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
