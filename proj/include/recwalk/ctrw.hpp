#pragma once

// Continuous-time random walk: step X_i arrives at time Y_1 + ... + Y_i. The
// record count by time t is R~_t = R_{N(t)} with N(t) = max{k : Y_1+...+Y_k <= t}.
// Steps use substream 0 and waits substream 1 of the replicate's stream, so the
// two sequences are independent and each can be replayed on its own.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/mittag_leffler.hpp"
#include "recwalk/parallel.hpp"
#include "recwalk/rng.hpp"
#include "recwalk/step_laws.hpp"
#include "recwalk/walk.hpp"

namespace recwalk {

struct CTRWConfig {
  StepLaw step_law = make_gaussian(1.0);
  WaitingLaw waiting_law = make_pareto(0.6, 1.0);
  std::vector<double> horizons;
  std::uint64_t reps = 1;
  std::uint64_t seed = 0;
};

struct CTRWSamples {
  std::vector<double> horizons;
  std::vector<std::vector<std::uint64_t>> r_tilde; // [horizon][replicate]
  std::vector<std::vector<std::uint64_t>> steps;   // N(t), same layout
};

namespace detail {

inline void check_ctrw(const CTRWConfig& c) {
  require(!c.horizons.empty(), "CTRW needs at least one horizon");
  require(std::is_sorted(c.horizons.begin(), c.horizons.end()), "CTRW horizons must be sorted ascending");
  require(c.horizons.front() >= 0.0, "CTRW horizons must be nonnegative");
  require(c.reps >= 1, "CTRW needs at least one replicate");
}

} // namespace detail

/// One replicate in a single pass: waits are drawn one ahead, and each horizon
/// is emitted when the next arrival would land past it.
inline void ctrw_replicate(const CTRWConfig& c, std::uint64_t r, std::vector<std::uint64_t>& r_tilde,
                           std::vector<std::uint64_t>& steps) {
  Stream step_stream(c.seed, r, kStepSubstream);
  Stream wait_stream(c.seed, r, kWaitSubstream);
  WalkOptions opts;
  opts.keep_ladders = false;
  RecordTracker<double> tracker(opts);
  r_tilde.assign(c.horizons.size(), 1);
  steps.assign(c.horizons.size(), 0);
  double clock = 0.0;
  std::uint64_t k = 0;
  double wait = sample_waiting(c.waiting_law, wait_stream);
  for (std::size_t h = 0; h < c.horizons.size(); ++h) {
    while (clock + wait <= c.horizons[h]) {
      clock += wait;
      tracker.push(sample_step(c.step_law, step_stream));
      ++k;
      wait = sample_waiting(c.waiting_law, wait_stream);
    }
    r_tilde[h] = tracker.stats().r_weak;
    steps[h] = k;
  }
}

inline CTRWSamples simulate_ctrw(const CTRWConfig& c) {
  detail::check_ctrw(c);
  CTRWSamples out;
  out.horizons = c.horizons;
  out.r_tilde.assign(c.horizons.size(), std::vector<std::uint64_t>(c.reps));
  out.steps.assign(c.horizons.size(), std::vector<std::uint64_t>(c.reps));
  parallel_for_index(c.reps, [&](std::uint64_t r) {
    std::vector<std::uint64_t> rt, st;
    ctrw_replicate(c, r, rt, st);
    for (std::size_t h = 0; h < rt.size(); ++h) {
      out.r_tilde[h][r] = rt[h];
      out.steps[h][r] = st[h];
    }
  });
  return out;
}

/// N(t) = max{k : Y_1 + ... + Y_k <= t} for each horizon, from the replicate's
/// wait substream alone.
inline std::vector<std::uint64_t> renewal_count(const CTRWConfig& c, std::uint64_t r) {
  detail::check_ctrw(c);
  Stream wait_stream(c.seed, r, kWaitSubstream);
  std::vector<double> arrivals;
  double clock = 0.0;
  while (true) {
    clock += sample_waiting(c.waiting_law, wait_stream);
    if (clock > c.horizons.back())
      break;
    arrivals.push_back(clock);
  }
  std::vector<std::uint64_t> n(c.horizons.size());
  for (std::size_t h = 0; h < c.horizons.size(); ++h)
    n[h] = static_cast<std::uint64_t>(
        std::upper_bound(arrivals.begin(), arrivals.end(), c.horizons[h]) - arrivals.begin());
  return n;
}

/// R_{N(t)} from the walk engine on the replicate's step substream, with N(t)
/// from renewal_count. Must equal the single-pass R~_t.
inline std::vector<std::uint64_t> ctrw_by_composition(const CTRWConfig& c, std::uint64_t r) {
  const auto n = renewal_count(c, r);
  std::vector<std::uint64_t> out(n.size());
  WalkOptions opts;
  opts.keep_ladders = false;
  for (std::size_t h = 0; h < n.size(); ++h) {
    Stream step_stream(c.seed, r, kStepSubstream);
    out[h] = run_walk(c.step_law, n[h], opts, step_stream).r_weak;
  }
  return out;
}

struct ScalingDiagnostics {
  double mean_ratio = 0;          // E R~_{t2} / E R~_{t1}
  double target_mean_ratio = 0;   // (t2/t1)^{alpha rho}
  double moment_ratio_t1 = 0;     // E R~^2 / (E R~)^2 at t1
  double moment_ratio_t2 = 0;
  double target_moment_ratio = 0; // 2 Gamma(1+alpha rho)^2 / Gamma(1+2 alpha rho)
  bool monotone = true;           // R~_{t2} >= R~_{t1} on every replicate
};

inline ScalingDiagnostics scaling_check(const std::vector<std::uint64_t>& at_t1,
                                        const std::vector<std::uint64_t>& at_t2, double t1, double t2,
                                        double alpha_rho) {
  require(t1 > 0.0 && t2 / t1 >= 10.0, "scaling check needs t2 / t1 >= 10");
  require(!at_t1.empty() && at_t1.size() == at_t2.size(), "scaling check needs paired samples");
  auto moments = [](const std::vector<std::uint64_t>& v, long double& m1, long double& m2) {
    m1 = m2 = 0;
    for (auto x : v) {
      m1 += static_cast<long double>(x);
      m2 += static_cast<long double>(x) * static_cast<long double>(x);
    }
    m1 /= static_cast<long double>(v.size());
    m2 /= static_cast<long double>(v.size());
  };
  long double a1, a2, b1, b2;
  moments(at_t1, a1, a2);
  moments(at_t2, b1, b2);
  ScalingDiagnostics d;
  d.mean_ratio = static_cast<double>(b1 / a1);
  d.target_mean_ratio = std::pow(t2 / t1, alpha_rho);
  d.moment_ratio_t1 = static_cast<double>(a2 / (a1 * a1));
  d.moment_ratio_t2 = static_cast<double>(b2 / (b1 * b1));
  d.target_moment_ratio = ml_moment_ratio(alpha_rho);
  for (std::size_t i = 0; i < at_t1.size(); ++i)
    d.monotone = d.monotone && at_t2[i] >= at_t1[i];
  return d;
}

} // namespace recwalk
