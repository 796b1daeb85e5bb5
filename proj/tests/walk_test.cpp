#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "recwalk/walk.hpp"

using namespace recwalk;

TEST(RunSteps, HandTracedPath) {
  const std::vector<std::int64_t> steps{1, -1, 2}; // S = 0, 1, 0, 2
  WalkOptions opts;
  opts.sigmas = {0, 1, 2};
  const auto t = run_steps<std::int64_t>(steps, opts);
  EXPECT_EQ(t.n, 3u);
  EXPECT_EQ(t.r_weak, 3u);
  EXPECT_EQ(t.r_strong, 3u);
  EXPECT_EQ(t.sigma_records(0), 3u);
  EXPECT_EQ(t.sigma_records(1), 3u);
  EXPECT_EQ(t.sigma_records(2), 2u);
  EXPECT_EQ(t.max_val, 2);
  EXPECT_EQ(t.n_nonneg, 3u);
  EXPECT_EQ(t.n_pos, 2u);
  EXPECT_EQ(t.last_max_pos, 3u);
  EXPECT_EQ(t.first_max_pos, 3u);
  EXPECT_EQ(t.ladder_epochs, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(t.ladder_heights, (std::vector<double>{1, 1}));
}

TEST(RunSteps, TiesAreWeakButNotStrong) {
  const std::vector<std::int64_t> steps{1, -1, 1, 0}; // S = 0, 1, 0, 1, 1
  const auto t = run_steps<std::int64_t>(steps);
  EXPECT_EQ(t.r_weak, 4u);
  EXPECT_EQ(t.r_strong, 2u);
  EXPECT_EQ(t.last_max_pos, 4u);
  EXPECT_EQ(t.first_max_pos, 1u);
  EXPECT_EQ(t.ladder_heights, (std::vector<double>{1, 0, 0}));
}

TEST(RunSteps, DecreasingPath) {
  const std::vector<std::int64_t> steps(5, -1);
  const auto t = run_steps<std::int64_t>(steps);
  EXPECT_EQ(t.r_weak, 1u);
  EXPECT_EQ(t.r_strong, 1u);
  EXPECT_TRUE(t.ladder_epochs.empty());
  EXPECT_EQ(t.max_val, 0);
  EXPECT_EQ(t.n_nonneg, 0u);
}

TEST(RunSteps, EmptyPath) {
  WalkOptions opts;
  opts.sigmas = {0.5};
  const auto t = run_steps<double>(std::vector<double>{}, opts);
  EXPECT_EQ(t.r_weak, 1u);
  EXPECT_EQ(t.r_strong, 1u);
  EXPECT_EQ(t.sigma_records(0.5), 1u);
  EXPECT_TRUE(t.ladder_epochs.empty());
  EXPECT_TRUE(t.ladder_heights.empty());
}

TEST(RunSteps, ThresholdedStartConvention) {
  const std::vector<double> steps{1, -1, 2}; // S = 0, 1, 0, 2
  WalkOptions opts;
  opts.threshold = std::pair{0.0, 0.0};
  EXPECT_EQ(run_steps<double>(steps, opts).r_thresholded, 3u); // same as r_weak
  opts.threshold = std::pair{0.0, 1.5};                         // only S_3 = 2 counts
  EXPECT_EQ(run_steps<double>(steps, opts).r_thresholded, 1u);
  opts.threshold = std::pair{-1.0, 0.0};                        // start below x2
  EXPECT_EQ(run_steps<double>(steps, opts).r_thresholded, 2u);
  opts.threshold = std::pair{3.0, 1.0};                         // everything counts
  EXPECT_EQ(run_steps<double>(steps, opts).r_thresholded, 3u);
}

TEST(RunSteps, RejectsNegativeSigma) {
  WalkOptions opts;
  opts.sigmas = {-1};
  EXPECT_THROW(RecordTracker<double>{opts}, precondition_error);
}

// Path-wise invariants over random walks of several laws.
TEST(RunWalk, PathInvariants) {
  const std::vector<StepLaw> laws{make_bernoulli_walk(0.5), make_bernoulli_walk(0.3),
                                  LatticeStepLaw::from_pmf(-2, {0.2, 0.1, 0.3, 0.15, 0.25}),
                                  make_gaussian(1.0), make_cauchy(1.0)};
  WalkOptions opts;
  opts.sigmas = {0, 0.5, 1.5, 3};
  for (std::size_t li = 0; li < laws.size(); ++li) {
    for (std::uint64_t r = 0; r < 200; ++r) {
      Stream s(17, r);
      const auto t = run_walk(laws[li], 300, opts, s);
      ASSERT_LE(t.r_strong, t.r_weak);
      ASSERT_LE(t.r_weak, t.n + 1);
      ASSERT_GE(t.r_strong, 1u);
      ASSERT_EQ(t.sigma_records(0), t.r_weak);
      for (std::size_t i = 1; i < t.r_sigma.size(); ++i)
        ASSERT_LE(t.r_sigma[i].count, t.r_sigma[i - 1].count);
      ASSERT_EQ(t.r_weak, 1 + t.ladder_epochs.size());
      std::uint64_t epochs = 0;
      double height = 0;
      for (std::size_t i = 0; i < t.ladder_epochs.size(); ++i) {
        epochs += t.ladder_epochs[i];
        ASSERT_GE(t.ladder_heights[i], 0.0);
        height += t.ladder_heights[i];
      }
      ASSERT_LE(epochs, t.n);
      ASSERT_EQ(epochs, t.last_max_pos);
      if (li < 3)
        ASSERT_EQ(height, t.max_val);
      else
        ASSERT_NEAR(height, t.max_val, 1e-9 * (1 + std::abs(t.max_val)));
      ASSERT_GE(t.last_max_pos, t.first_max_pos);
      ASSERT_EQ(t.last_max_pos == t.n, t.final_val == t.max_val);
    }
  }
}

TEST(RunWalk, RightContinuousMaximumIdentity) {
  const auto law = LatticeStepLaw::from_pmf(-3, {0.1, 0.2, 0.3, 0.1, 0.3}); // hi = 1
  for (std::uint64_t r = 0; r < 500; ++r) {
    Stream s(23, r);
    const auto t = run_walk(law, 400, {}, s);
    ASSERT_EQ(t.max_val, static_cast<double>(t.r_strong - 1));
  }
}

TEST(MonteCarlo, SparreAndersenFrequencies) {
  const StepLaw law = LatticeStepLaw::from_pmf(-1, {0.4, 0.25, 0.35});
  const std::uint64_t reps = 100000, n = 20;
  const auto last = monte_carlo(law, n, reps, {Statistic::last_max_pos}, 5);
  const auto nonneg = monte_carlo(law, n, reps, {Statistic::n_nonneg}, 6);
  double f1 = 0, f2 = 0;
  for (double v : last.values())
    f1 += v == n;
  for (double v : nonneg.values())
    f2 += v == n;
  f1 /= reps;
  f2 /= reps;
  const double se = std::sqrt(f1 * (1 - f1) / reps + f2 * (1 - f2) / reps);
  EXPECT_NEAR(f1, f2, 3 * se);
}

TEST(MonteCarlo, TwoStepRecordProbability) {
  const auto s = monte_carlo(make_bernoulli_walk(0.5), 2, 100000, {Statistic::r_weak}, 1);
  const auto h = s.histogram();
  const double p3 = h.at(3) / 1e5;
  EXPECT_NEAR(p3, 0.25, 4 * std::sqrt(0.25 * 0.75 / 1e5));
  EXPECT_EQ(h.count(4), 0u);
}

TEST(MonteCarlo, SingleReplicateMatchesRunWalk) {
  const StepLaw law = make_gaussian(2.0);
  const auto s = monte_carlo(law, 1000, 1, {Statistic::r_strong}, 99);
  Stream stream(99, 0, kStepSubstream);
  EXPECT_EQ(s.values().at(0), static_cast<double>(run_walk(law, 1000, {}, stream).r_strong));
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
  const StepLaw law = make_bernoulli_walk(0.5);
  setenv("RECWALK_WORKERS", "1", 1);
  const auto one = monte_carlo(law, 500, 300, {Statistic::r_sigma, 1.5}, 3);
  setenv("RECWALK_WORKERS", "4", 1);
  const auto four = monte_carlo(law, 500, 300, {Statistic::r_sigma, 1.5}, 3);
  unsetenv("RECWALK_WORKERS");
  EXPECT_EQ(one.values(), four.values());
}

// E R_n = sum_{k<=n} P(S_1..S_k >= 0) = sum_{k<=n} binom(2k,k) 4^{-k} for
// continuous symmetric steps.
TEST(MonteCarlo, GaussianRecordMean) {
  const std::uint64_t n = 2000, reps = 20000;
  double expect = 0, term = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    expect += term;
    term *= (2.0 * k + 1) / (2.0 * k + 2);
  }
  const auto s = monte_carlo(make_gaussian(1.0), n, reps, {Statistic::r_weak}, 12);
  EXPECT_NEAR(s.mean(), expect, 4 * s.standard_error());
  EXPECT_NEAR(expect / std::sqrt(double(n)), 2 / std::sqrt(M_PI), 0.02);
}

TEST(Summary, SerialisationAndMerge) {
  EmpiricalSummary a("r_weak", {1, 2, 2}, 0), b("r_weak", {3}, 3);
  a.merge(b);
  EXPECT_EQ(a.count(), 4u);
  EXPECT_DOUBLE_EQ(a.mean(), 2.0);
  EXPECT_DOUBLE_EQ(a.moment(2), 4.5);
  std::ostringstream csv;
  a.write_csv(csv);
  EXPECT_EQ(csv.str(), "replicate,value\n0,1\n1,2\n2,2\n3,3\n");
  const auto j = a.to_json();
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["histogram"].dump(), "[[1,1],[2,2],[3,1]]");

  EmpiricalSummary c("r_weak", {7}, 10);
  EXPECT_THROW(a.merge(c), precondition_error);
  EmpiricalSummary d("r_weak", {0.5}, 0);
  EmpiricalSummary e("r_weak", {1.5}, 1);
  e.merge(d);
  EXPECT_EQ(e.first_index(), 0u);
  EXPECT_EQ(e.values(), (std::vector<double>{0.5, 1.5}));
  EXPECT_TRUE(e.to_json()["histogram"].empty());
}
