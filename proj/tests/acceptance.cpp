// Runs acceptance criteria 1-13 at their stated tolerances; one line each.
// Usage: acceptance [suite] [seed]   (defaults: full 2024)

#include <cstdio>
#include <cstdlib>
#include <string>

#include "recwalk/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "full";
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 2024;
  const auto report = recwalk::run_acceptance(suite, seed, [](const recwalk::CriterionResult& r, double secs) {
    std::printf("%s  [%.1fs]\n    %s\n", recwalk::format_row(r).c_str(), secs, r.metrics.dump().c_str());
    std::fflush(stdout);
  });
  int failed = 0;
  for (const auto& r : report.rows)
    failed += !r.supplementary && !r.pass;
  std::printf("%d primary criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
