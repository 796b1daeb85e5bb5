// Exact law of R_n next to a Monte Carlo histogram, then the n^{1/2}
// growth of E R_n for a continuous symmetric walk.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "recwalk/recwalk.hpp"

using namespace recwalk;

int main() {
  // Upward jumps beyond 200 carry negligible mass and only widen the lattice.
  const auto law = truncated(make_left_continuous(0.5, 0.5, 1e-12), 200);
  const std::size_t n = 60;
  const auto series = spitzer_series(law, n);
  const auto exact = record_count_distribution(series.t, n);
  const auto mc = monte_carlo(law, n, 200000, {}, 1);
  const auto hist = mc.histogram();
  std::printf("left_continuous(1/2, 1/2) truncated at 200, n = %zu\n  m   exact      simulated\n", n);
  for (std::size_t m = 1; m <= 12; ++m) {
    const auto it = hist.find(static_cast<std::int64_t>(m));
    const double freq = it == hist.end() ? 0.0 : static_cast<double>(it->second) / mc.count();
    std::printf("%3zu   %.5f    %.5f\n", m, exact[m], freq);
  }

  std::printf("\ngaussian steps: E R_n / sqrt(n) against 2/sqrt(pi) = %.4f\n", 2 / std::sqrt(std::numbers::pi));
  for (std::uint64_t steps : {100, 1000, 10000}) {
    const auto s = monte_carlo(make_gaussian(1.0), steps, 20000, {}, 2);
    std::printf("  n = %-6llu %.4f  (moment ratio %.3f)\n", static_cast<unsigned long long>(steps),
                s.mean() / std::sqrt(static_cast<double>(steps)), s.moment_ratio());
  }
}
