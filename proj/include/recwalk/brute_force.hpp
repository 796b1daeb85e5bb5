#pragma once

// Weighted enumeration of every path of a lattice walk. Exponential cost; used
// as the reference for the exact engine at small n.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/step_laws.hpp"
#include "recwalk/walk.hpp"

namespace recwalk {

inline constexpr double kMaxEnumeratedPaths = 268435456.0; // 2^28

/// Record state of a path prefix.
struct PathState {
  std::int64_t s = 0;
  std::int64_t max = 0;
  std::uint32_t r_weak = 1;
  std::uint32_t r_strong = 1;
  std::uint32_t n_nonneg = 0;
  std::uint32_t n_pos = 0;
  std::uint32_t last_max_pos = 0;
  std::uint32_t first_max_pos = 0;

  PathState step(std::int64_t x, std::uint32_t k) const {
    PathState t = *this;
    t.s += x;
    t.n_nonneg += t.s >= 0;
    t.n_pos += t.s > 0;
    if (t.s >= t.max) {
      ++t.r_weak;
      t.last_max_pos = k;
      if (t.s > t.max) {
        ++t.r_strong;
        t.first_max_pos = k;
      }
      t.max = t.s;
    }
    return t;
  }
};

namespace detail {

template <class Visitor>
void enumerate_from(const std::vector<std::pair<std::int64_t, double>>& support, std::uint32_t n,
                    std::uint32_t depth, const PathState& state, double weight, Visitor& visit) {
  visit(depth, weight, state);
  if (depth == n)
    return;
  for (const auto& [x, px] : support)
    enumerate_from(support, n, depth + 1, state.step(x, depth + 1), weight * px, visit);
}

inline std::vector<std::pair<std::int64_t, double>> support_of(const LatticeStepLaw& law) {
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::int64_t k = law.lo(); k <= law.hi(); ++k)
    if (law.pmf(k) > 0)
      out.emplace_back(k, law.pmf(k));
  return out;
}

inline void check_size(const LatticeStepLaw& law, std::uint32_t n) {
  require(n <= 16, "brute-force enumeration is limited to n <= 16");
  const double paths = std::pow(static_cast<double>(law.support_size()), n);
  require(paths <= kMaxEnumeratedPaths, "enumeration too large: support^n exceeds 2^28 paths");
}

} // namespace detail

/// Calls visit(depth, probability, state) for every path prefix of length 0..n.
template <class Visitor>
void enumerate_paths(const LatticeStepLaw& law, std::uint32_t n, Visitor&& visit) {
  detail::check_size(law, n);
  const auto support = detail::support_of(law);
  detail::enumerate_from(support, n, 0, PathState{}, 1.0, visit);
}

/// Exact per-depth tables, d = 0..n.
struct BruteForceTables {
  std::vector<double> p_last_max_at_end;   // P(L_{d,d} = d)
  std::vector<double> p_first_max_at_end;  // P(L_{d,0} = d)
  std::vector<double> p_all_nonneg;        // P(N_d = d)
  std::vector<double> p_all_pos;           // P(N_d^+ = d)
  std::vector<std::vector<double>> r_weak_pmf;   // [d][m], m = 0..d+1
  std::vector<std::vector<double>> r_strong_pmf; // [d][m]
};

inline BruteForceTables brute_force_record_tables(const LatticeStepLaw& law, std::uint32_t n) {
  BruteForceTables t;
  t.p_last_max_at_end.assign(n + 1, 0.0);
  t.p_first_max_at_end.assign(n + 1, 0.0);
  t.p_all_nonneg.assign(n + 1, 0.0);
  t.p_all_pos.assign(n + 1, 0.0);
  for (std::uint32_t d = 0; d <= n; ++d) {
    t.r_weak_pmf.emplace_back(d + 2, 0.0);
    t.r_strong_pmf.emplace_back(d + 2, 0.0);
  }
  enumerate_paths(law, n, [&](std::uint32_t d, double w, const PathState& s) {
    if (s.last_max_pos == d)
      t.p_last_max_at_end[d] += w;
    if (s.first_max_pos == d)
      t.p_first_max_at_end[d] += w;
    if (s.n_nonneg == d)
      t.p_all_nonneg[d] += w;
    if (s.n_pos == d)
      t.p_all_pos[d] += w;
    t.r_weak_pmf[d][s.r_weak] += w;
    t.r_strong_pmf[d][s.r_strong] += w;
  });
  return t;
}

/// Exact law of any TrajectoryStats statistic at depth n (value -> probability).
/// Rebuilds the full stats at every leaf, so it is meant for modest n.
inline std::map<double, double> brute_force_enumerate(const LatticeStepLaw& law, std::uint32_t n,
                                                      const StatisticSelector& statistic,
                                                      const WalkOptions& opts = {}) {
  detail::check_size(law, n);
  const auto support = detail::support_of(law);
  WalkOptions local = opts;
  local.keep_ladders = false;
  if (statistic.kind == Statistic::r_sigma)
    local.sigmas.push_back(statistic.sigma);
  std::map<double, double> table;
  std::vector<std::int64_t> path(n);
  std::vector<std::size_t> idx(n, 0);
  // Odometer over support^n.
  while (true) {
    double w = 1.0;
    for (std::uint32_t i = 0; i < n; ++i) {
      path[i] = support[idx[i]].first;
      w *= support[idx[i]].second;
    }
    table[statistic.extract(run_steps<std::int64_t>(path, local))] += w;
    std::uint32_t i = 0;
    while (i < n && ++idx[i] == support.size())
      idx[i++] = 0;
    if (i == n)
      break;
  }
  return table;
}

} // namespace recwalk
