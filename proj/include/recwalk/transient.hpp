#pragma once

// Monte Carlo R_infinity for walks drifting to -infinity, on walks cut at a
// step cap chosen from the exact engine so that a record after the cap has
// probability below a tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/walk.hpp"

namespace recwalk {

struct RInfinitySample {
  std::size_t cap = 0;
  double after_cap_bound = 1;  // bound on P(a record occurs after the cap)
  bool certified = false;      // after_cap_bound < tolerance
  std::string warning;         // set when the cap could not be certified
  EmpiricalSummary summary;    // final weak-record counts, replicate order
};

struct RecordCap {
  std::size_t cap = 0;
  double after_cap_bound = 1;
};

/// Smallest k with record_after_cap_bound < tol, growing the exact-engine
/// horizon up to max_horizon; nullopt when none is found.
inline std::optional<RecordCap> choose_record_cap(const LatticeStepLaw& law, double tol,
                                                  std::size_t max_horizon = 1 << 16) {
  for (std::size_t N = 64; N <= max_horizon; N *= 2) {
    const auto s = spitzer_series(law, N);
    require(s.drift == DriftClass::drifts_down, "R_infinity needs a walk drifting to -infinity");
    for (std::size_t k = 0; k <= N; ++k)
      if (const double b = record_after_cap_bound(s, k); b < tol)
        return RecordCap{k, b};
  }
  return std::nullopt;
}

/// Without a cap, the smallest certified one for tolerance tol is used.
inline RInfinitySample empirical_r_infinity(const LatticeStepLaw& law, std::optional<std::size_t> cap,
                                            std::uint64_t reps, std::uint64_t seed, double tol = 1e-4) {
  require(classify(law) == DriftClass::drifts_down, "R_infinity needs a walk drifting to -infinity");
  RInfinitySample out;
  if (cap) {
    out.cap = *cap;
    // A horizon past the cap tightens the certified defect interval.
    const auto s = spitzer_series(law, std::max<std::size_t>(2 * out.cap, 64));
    out.after_cap_bound = record_after_cap_bound(s, out.cap);
  } else if (const auto c = choose_record_cap(law, tol)) {
    out.cap = c->cap;
    out.after_cap_bound = c->after_cap_bound;
  } else {
    out.cap = 1 << 16;
    out.warning = "no certified cap within 65536 steps; using 65536";
  }
  out.certified = out.after_cap_bound < tol;
  if (!out.certified && out.warning.empty())
    out.warning = "cap " + std::to_string(out.cap) + " leaves P(record after cap) <= " +
                  format_double(out.after_cap_bound) + ", above " + format_double(tol);
  out.summary = monte_carlo(law, out.cap, reps, {}, seed);
  return out;
}

/// Total variation between an integer sample and a law on {1, 2, ...}; mass
/// the law puts beyond the largest sample is counted in full.
template <class Pmf>
double total_variation(const std::map<std::int64_t, std::uint64_t>& hist, std::uint64_t n, Pmf&& pmf) {
  require(n > 0, "total variation needs samples");
  const std::int64_t top = hist.empty() ? 1 : std::max<std::int64_t>(1, hist.rbegin()->first);
  long double tv = 0, covered = 0;
  for (std::int64_t m = 1; m <= top; ++m) {
    const auto it = hist.find(m);
    const double emp = it == hist.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
    const double p = pmf(m);
    covered += p;
    tv += std::abs(emp - p);
  }
  tv += std::max(0.0L, 1.0L - covered);
  return static_cast<double>(tv / 2);
}

} // namespace recwalk
