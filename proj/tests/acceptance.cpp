// Runs the numbered acceptance criteria; one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "hall/suite.hpp"

int main(int argc, char** argv) {
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (argc > 1) jobs = std::atoi(argv[1]);
  auto results = hall::run_suite(hall::acceptance_suite(), jobs);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d: %s  %s (%.0f ms)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.elapsed_ms);
    if (r.pass) continue;
    ++failed;
    for (const auto& rep : r.reports)
      for (const auto& f : rep.failures) std::printf("    %s: %s\n", rep.check.c_str(), f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
