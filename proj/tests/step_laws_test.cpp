#include <gtest/gtest.h>

#include <cmath>

#include "recwalk/step_laws.hpp"

using namespace recwalk;

TEST(Bernoulli, Construction) {
  const auto half = make_bernoulli_walk(0.5);
  EXPECT_EQ(half.pmf(-1), 0.5);
  EXPECT_EQ(half.pmf(1), 0.5);
  EXPECT_EQ(half.pmf(0), 0.0);
  EXPECT_EQ(half.truncation_mass(), 0.0);
  EXPECT_EQ(half.mean(), 0.0);

  const auto third = make_bernoulli_walk(1.0 / 3);
  EXPECT_DOUBLE_EQ(third.pmf(-1), 2.0 / 3);
  EXPECT_DOUBLE_EQ(third.pmf(1), 1.0 / 3);
  EXPECT_NEAR(third.mean(), -1.0 / 3, 1e-15);
  EXPECT_NEAR(make_bernoulli_walk(2.0 / 3).mean(), 1.0 / 3, 1e-15);
}

TEST(Bernoulli, RejectsDegenerate) {
  EXPECT_THROW(make_bernoulli_walk(0.0), precondition_error);
  EXPECT_THROW(make_bernoulli_walk(1.0), precondition_error);
  EXPECT_THROW(LatticeStepLaw::from_pmf(3, {0.0, 1.0, 0.0}), precondition_error);
}

// Taylor coefficients of (1-s)^a via Gamma functions, independent of the
// product recurrence used by the factory.
static double binomial_series_coef(double a, int j) {
  return std::tgamma(a + 1) / (std::tgamma(j + 1.0) * std::tgamma(a - j + 1)) * (j % 2 ? -1 : 1);
}

TEST(LeftContinuous, LeadingProbabilities) {
  const auto law = make_left_continuous(0.5, 0.5);
  EXPECT_NEAR(law.pmf(-1), 1.0 / 3, 1e-12);
  EXPECT_NEAR(law.pmf(0), 0.5, 1e-12);
  EXPECT_NEAR(law.pmf(1), 1.0 / 8, 1e-12);
  EXPECT_NEAR(law.pmf(2), 1.0 / 48, 1e-12);
  EXPECT_EQ(law.lo(), -1);
  EXPECT_LT(law.truncation_mass(), 1e-12);
}

TEST(LeftContinuous, MatchesGammaFunctionExpansion) {
  for (double beta : {0.2, 0.5, 0.8}) {
    const double gamma = 0.3;
    const auto law = make_left_continuous(beta, gamma, 1e-12, 1 << 14);
    const double kappa = gamma / (1 + beta);
    for (int k = 1; k <= 12; ++k) {
      const double expect = kappa * binomial_series_coef(1 + beta, k + 1);
      EXPECT_NEAR(law.pmf(k), expect / (1 - law.truncation_mass()), 1e-14) << beta << " " << k;
    }
  }
}

TEST(LeftContinuous, NonnegativeOnGrid) {
  for (double beta : {0.2, 0.5, 0.8})
    for (double gamma : {0.2, 0.5, 0.8}) {
      const auto law = make_left_continuous(beta, gamma, 1e-12, 1 << 16);
      double total = 0;
      for (double p : law.pmf()) {
        ASSERT_GE(p, 0.0);
        total += p;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_NEAR(law.pmf(-1), gamma / (1 + beta) / (1 - law.truncation_mass()), 1e-14);
      EXPECT_EQ(law.drift(), 0.0);
    }
}

TEST(LeftContinuous, TruncationShiftsMeanOnlySlightly) {
  // The family has mean zero; cutting the heavy right tail at K removes
  // sum_{k>K} k p_k ~ K * residual * (1+beta)/beta of positive mean.
  const double beta = 0.5;
  const auto law = make_left_continuous(beta, 0.5);
  const double K = static_cast<double>(law.hi());
  const double bound = 2 * law.truncation_mass() * K * (1 + beta) / beta;
  EXPECT_LT(law.mean(), 0.0);
  EXPECT_LT(std::abs(law.mean()), bound);
  EXPECT_LT(std::abs(law.mean()), 1e-3);
}

TEST(LeftContinuous, RejectsOutOfRange) {
  EXPECT_THROW(make_left_continuous(0.0, 0.5), precondition_error);
  EXPECT_THROW(make_left_continuous(1.0, 0.5), precondition_error);
  EXPECT_THROW(make_left_continuous(0.5, 0.0), precondition_error);
  EXPECT_THROW(make_left_continuous(0.5, 1.0), precondition_error);
}

TEST(Lattice, MirroredAndTruncated) {
  const auto law = make_left_continuous(0.5, 0.5, 1e-12, 64);
  const auto m = mirrored(law);
  EXPECT_EQ(m.hi(), 1);
  EXPECT_EQ(m.lo(), -64);
  EXPECT_DOUBLE_EQ(m.pmf(1), law.pmf(-1));
  EXPECT_DOUBLE_EQ(m.pmf(-2), law.pmf(2));
  EXPECT_EQ(m.drift(), 0.0);

  const auto t = truncated(law, 2);
  EXPECT_EQ(t.hi(), 2);
  EXPECT_EQ(t.support_size(), 4u);
  double s = 0;
  for (double p : t.pmf())
    s += p;
  EXPECT_NEAR(s, 1.0, 1e-15);
  EXPECT_NEAR(t.pmf(0) / t.pmf(-1), 1.5, 1e-12);
}

TEST(Sampling, LatticeFrequencies) {
  const auto law = make_left_continuous(0.5, 0.5);
  Stream s(11, 0);
  const int n = 1000000;
  int below = 0, zero = 0, one = 0;
  for (int i = 0; i < n; ++i) {
    const auto x = law.sample(s);
    ASSERT_GE(x, -1);
    below += x == -1;
    zero += x == 0;
    one += x == 1;
  }
  auto check = [&](int count, double p) {
    EXPECT_NEAR(count / double(n), p, 4 * std::sqrt(p * (1 - p) / n));
  };
  check(below, law.pmf(-1));
  check(zero, law.pmf(0));
  check(one, law.pmf(1));
}

TEST(Sampling, BernoulliSupport) {
  const StepLaw law = make_bernoulli_walk(0.5);
  Stream s(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double x = sample_step(law, s);
    ASSERT_TRUE(x == -1.0 || x == 1.0);
  }
}

TEST(Sampling, GaussianMean) {
  const StepLaw law = make_gaussian(1.0);
  Stream s(2, 0);
  double sum = 0;
  for (int i = 0; i < 1000000; ++i)
    sum += sample_step(law, s);
  EXPECT_LT(std::abs(sum / 1e6), 4e-3);
}

TEST(Sampling, ContinuousFamiliesAreSymmetric) {
  for (const auto& law : {make_gaussian(1.0), make_uniform_symmetric(2.0), make_cauchy(0.5)}) {
    const int walks = 100000;
    int c1 = 0, c10 = 0, c100 = 0;
    for (int r = 0; r < walks; ++r) {
      Stream s(9, static_cast<std::uint64_t>(r));
      double x = 0;
      for (int k = 1; k <= 100; ++k) {
        x += law.sample(s);
        if (k == 1)
          c1 += x >= 0;
        if (k == 10)
          c10 += x >= 0;
      }
      c100 += x >= 0;
    }
    const double se = std::sqrt(0.25 / walks);
    EXPECT_NEAR(c1 / double(walks), 0.5, 3 * se) << law.label();
    EXPECT_NEAR(c10 / double(walks), 0.5, 3 * se) << law.label();
    EXPECT_NEAR(c100 / double(walks), 0.5, 3 * se) << law.label();
  }
}

TEST(Waiting, ParetoInverseCdf) {
  const auto w = make_pareto(0.5, 1.0);
  EXPECT_EQ(w.from_uniform(1.0), 1.0);
  EXPECT_DOUBLE_EQ(w.from_uniform(0.25), 16.0);
  EXPECT_EQ(make_pareto(0.7, 1.0).from_uniform(1.0), 1.0);
  EXPECT_THROW(make_pareto(1.0, 1.0), precondition_error);
  EXPECT_THROW(make_pareto(0.5, 0.0), precondition_error);
  EXPECT_NEAR(w.slowly_varying_constant(), std::sqrt(M_PI), 1e-14);
}

TEST(Waiting, ParetoEmpiricalTail) {
  const auto w = make_pareto(0.6, 2.0);
  Stream s(4, 0, kWaitSubstream);
  const int n = 1000000;
  int over2 = 0, over10 = 0;
  for (int i = 0; i < n; ++i) {
    const double y = sample_waiting(w, s);
    ASSERT_GE(y, 2.0);
    over2 += y > 4.0;
    over10 += y > 20.0;
  }
  for (auto [count, x] : {std::pair{over2, 4.0}, std::pair{over10, 20.0}}) {
    const double p = std::pow(x / 2.0, -0.6);
    EXPECT_NEAR(count / double(n), p, 3 * std::sqrt(p * (1 - p) / n));
    EXPECT_DOUBLE_EQ(w.tail(x), p);
  }
}

TEST(Waiting, OtherFamilies) {
  Stream s(1, 0);
  EXPECT_EQ(sample_waiting(make_deterministic_wait(2.5), s), 2.5);
  const auto e = make_exponential_wait(3.0);
  double sum = 0;
  for (int i = 0; i < 100000; ++i)
    sum += sample_waiting(e, s);
  EXPECT_NEAR(sum / 1e5, 3.0, 4 * 3.0 / std::sqrt(1e5));
}
