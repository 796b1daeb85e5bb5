#pragma once

// Streaming record statistics of a single walk, and Monte Carlo over replicates.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/parallel.hpp"
#include "recwalk/rng.hpp"
#include "recwalk/step_laws.hpp"
#include "recwalk/summary.hpp"

namespace recwalk {

struct WalkOptions {
  std::vector<double> sigmas;                          // sigma-record thresholds, each >= 0
  std::optional<std::pair<double, double>> threshold;  // (x1, x2): start at x1, count records >= x2
  bool keep_ladders = true;                            // store T_i and Z_i lists
};

struct SigmaCount {
  double sigma = 0;
  std::uint64_t count = 1;
};

/// Everything a single pass over S_0 = 0, S_1, ..., S_n records.
/// Values are reported as doubles; lattice walks are tracked in exact integers.
struct TrajectoryStats {
  std::uint64_t n = 0;
  std::uint64_t r_weak = 1;
  std::uint64_t r_strong = 1;
  std::vector<SigmaCount> r_sigma;
  double max_val = 0;
  double final_val = 0;
  std::uint64_t n_nonneg = 0;      // #{1 <= i <= n : S_i >= 0}
  std::uint64_t n_pos = 0;         // #{1 <= i <= n : S_i > 0}
  std::uint64_t last_max_pos = 0;  // L_{n,n}
  std::uint64_t first_max_pos = 0; // L_{n,0}
  std::vector<std::uint64_t> ladder_epochs;
  std::vector<double> ladder_heights;
  std::optional<std::uint64_t> r_thresholded;

  std::uint64_t sigma_records(double sigma) const {
    for (const auto& s : r_sigma)
      if (s.sigma == sigma)
        return s.count;
    throw precondition_error("sigma " + format_double(sigma) + " was not tracked");
  }
};

/// Incremental tracker; feed steps one at a time.
template <class Value>
class RecordTracker {
public:
  explicit RecordTracker(const WalkOptions& opts) : keep_ladders_(opts.keep_ladders) {
    for (double s : opts.sigmas)
      require(s >= 0.0, "sigma thresholds must be nonnegative");
    sigmas_ = opts.sigmas;
    sigma_last_.assign(sigmas_.size(), Value{0});
    sigma_count_.assign(sigmas_.size(), 1);
    if (opts.threshold) {
      x1_ = opts.threshold->first;
      x2_ = opts.threshold->second;
      thresholded_ = true;
      thr_count_ = x1_ >= x2_ ? 1 : 0;
    }
  }

  void push(Value step) {
    ++k_;
    s_ += step;
    n_nonneg_ += s_ >= Value{0};
    n_pos_ += s_ > Value{0};
    if (s_ >= max_) {
      ++r_weak_;
      if (keep_ladders_) {
        epochs_.push_back(k_ - last_record_pos_);
        heights_.push_back(static_cast<double>(s_ - max_));
      }
      last_record_pos_ = k_;
      last_max_pos_ = k_;
      if (s_ > max_) {
        ++r_strong_;
        first_max_pos_ = k_;
      }
      max_ = s_;
      if (thresholded_ && x1_ + static_cast<double>(s_) >= x2_)
        ++thr_count_;
    }
    for (std::size_t i = 0; i < sigmas_.size(); ++i) {
      if (static_cast<double>(s_ - sigma_last_[i]) >= sigmas_[i]) {
        ++sigma_count_[i];
        sigma_last_[i] = s_;
      }
    }
  }

  Value position() const { return s_; }
  std::uint64_t steps() const { return k_; }
  std::uint64_t weak_records() const { return r_weak_; }
  std::uint64_t strong_records() const { return r_strong_; }
  Value maximum() const { return max_; }

  TrajectoryStats stats() const {
    TrajectoryStats t;
    t.n = k_;
    t.r_weak = r_weak_;
    t.r_strong = r_strong_;
    for (std::size_t i = 0; i < sigmas_.size(); ++i)
      t.r_sigma.push_back({sigmas_[i], sigma_count_[i]});
    t.max_val = static_cast<double>(max_);
    t.final_val = static_cast<double>(s_);
    t.n_nonneg = n_nonneg_;
    t.n_pos = n_pos_;
    t.last_max_pos = last_max_pos_;
    t.first_max_pos = first_max_pos_;
    t.ladder_epochs = epochs_;
    t.ladder_heights = heights_;
    if (thresholded_)
      t.r_thresholded = thr_count_;
    return t;
  }

private:
  bool keep_ladders_;
  Value s_{0};
  Value max_{0};
  std::uint64_t k_ = 0;
  std::uint64_t r_weak_ = 1;
  std::uint64_t r_strong_ = 1;
  std::uint64_t n_nonneg_ = 0;
  std::uint64_t n_pos_ = 0;
  std::uint64_t last_max_pos_ = 0;
  std::uint64_t first_max_pos_ = 0;
  std::uint64_t last_record_pos_ = 0;
  std::vector<double> sigmas_;
  std::vector<Value> sigma_last_;
  std::vector<std::uint64_t> sigma_count_;
  bool thresholded_ = false;
  double x1_ = 0, x2_ = 0;
  std::uint64_t thr_count_ = 0;
  std::vector<std::uint64_t> epochs_;
  std::vector<double> heights_;
};

/// Stats of a given step sequence (hand-traced paths, enumeration).
template <class Value>
TrajectoryStats run_steps(std::span<const Value> steps, const WalkOptions& opts = {}) {
  RecordTracker<Value> tracker(opts);
  for (Value x : steps)
    tracker.push(x);
  return tracker.stats();
}

inline TrajectoryStats run_walk(const LatticeStepLaw& law, std::uint64_t n, const WalkOptions& opts,
                                Stream& stream) {
  RecordTracker<std::int64_t> tracker(opts);
  for (std::uint64_t k = 0; k < n; ++k)
    tracker.push(law.sample(stream));
  return tracker.stats();
}

inline TrajectoryStats run_walk(const ContinuousStepLaw& law, std::uint64_t n,
                                const WalkOptions& opts, Stream& stream) {
  RecordTracker<double> tracker(opts);
  for (std::uint64_t k = 0; k < n; ++k)
    tracker.push(law.sample(stream));
  return tracker.stats();
}

inline TrajectoryStats run_walk(const StepLaw& law, std::uint64_t n, const WalkOptions& opts,
                                Stream& stream) {
  return std::visit([&](const auto& l) { return run_walk(l, n, opts, stream); }, law);
}

enum class Statistic {
  r_weak,
  r_strong,
  r_sigma,
  r_thresholded,
  max_val,
  final_val,
  n_nonneg,
  n_pos,
  last_max_pos,
  first_max_pos,
};

struct StatisticSelector {
  Statistic kind = Statistic::r_weak;
  double sigma = 0; // for r_sigma

  std::string name() const {
    switch (kind) {
    case Statistic::r_weak: return "r_weak";
    case Statistic::r_strong: return "r_strong";
    case Statistic::r_sigma: return "r_sigma:" + format_double(sigma);
    case Statistic::r_thresholded: return "r_thresholded";
    case Statistic::max_val: return "max_val";
    case Statistic::final_val: return "final_val";
    case Statistic::n_nonneg: return "n_nonneg";
    case Statistic::n_pos: return "n_pos";
    case Statistic::last_max_pos: return "last_max_pos";
    case Statistic::first_max_pos: return "first_max_pos";
    }
    return "?";
  }

  double extract(const TrajectoryStats& t) const {
    switch (kind) {
    case Statistic::r_weak: return static_cast<double>(t.r_weak);
    case Statistic::r_strong: return static_cast<double>(t.r_strong);
    case Statistic::r_sigma: return static_cast<double>(t.sigma_records(sigma));
    case Statistic::r_thresholded:
      require(t.r_thresholded.has_value(), "no threshold configured");
      return static_cast<double>(*t.r_thresholded);
    case Statistic::max_val: return t.max_val;
    case Statistic::final_val: return t.final_val;
    case Statistic::n_nonneg: return static_cast<double>(t.n_nonneg);
    case Statistic::n_pos: return static_cast<double>(t.n_pos);
    case Statistic::last_max_pos: return static_cast<double>(t.last_max_pos);
    case Statistic::first_max_pos: return static_cast<double>(t.first_max_pos);
    }
    return 0;
  }
};

/// Applies fn(stats) to reps independent walks; replicate r uses stream
/// (seed, r). Returns values in replicate order.
template <class Fn>
std::vector<double> monte_carlo_map(const StepLaw& law, std::uint64_t n, std::uint64_t reps,
                                    std::uint64_t seed, const WalkOptions& opts, Fn&& fn) {
  require(reps >= 1, "monte carlo needs at least one replicate");
  std::vector<double> out(reps);
  parallel_for_index(reps, [&](std::uint64_t r) {
    Stream stream(seed, r, kStepSubstream);
    out[r] = fn(run_walk(law, n, opts, stream));
  });
  return out;
}

inline EmpiricalSummary monte_carlo(const StepLaw& law, std::uint64_t n, std::uint64_t reps,
                                    const StatisticSelector& collect, std::uint64_t seed,
                                    WalkOptions opts = {}) {
  opts.keep_ladders = false;
  if (collect.kind == Statistic::r_sigma) {
    bool present = false;
    for (double s : opts.sigmas)
      present = present || s == collect.sigma;
    if (!present)
      opts.sigmas.push_back(collect.sigma);
  }
  auto values = monte_carlo_map(law, n, reps, seed, opts,
                                [&](const TrajectoryStats& t) { return collect.extract(t); });
  return EmpiricalSummary(collect.name(), std::move(values));
}

} // namespace recwalk
