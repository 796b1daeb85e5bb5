#include <gtest/gtest.h>

#include <cmath>

#include "recwalk/ladder.hpp"

using namespace recwalk;

TEST(LadderHeight, BernoulliHalf) {
  const auto law = make_bernoulli_walk(0.5);
  const auto exact = ladder_height_exact(law);
  ASSERT_EQ(exact.z_pmf.size(), 2u);
  EXPECT_NEAR(exact.z_pmf[0], 0.5, 1e-14);
  EXPECT_NEAR(exact.z_pmf[1], 0.5, 1e-14);
  EXPECT_NEAR(exact.z_defect, 0.0, 1e-14);

  const auto dp = ladder_height_pmf(law, 4000, 1);
  EXPECT_DOUBLE_EQ(dp.z_pmf[1], 0.5);
  EXPECT_NEAR(dp.z_pmf[0], 0.5, 0.02); // return to 0 has a heavy tail
  EXPECT_NEAR(dp.total(), 1.0, 1e-12);
  EXPECT_TRUE(dp.warning);
}

TEST(LadderHeight, BernoulliThird) {
  const auto law = make_bernoulli_walk(1.0 / 3);
  const auto exact = ladder_height_exact(law);
  EXPECT_NEAR(exact.z_pmf[0], 1.0 / 3, 1e-14);
  EXPECT_NEAR(exact.z_pmf[1], 1.0 / 3, 1e-14);
  EXPECT_NEAR(exact.z_defect, 1.0 / 3, 1e-14);

  const auto dp = ladder_height_pmf(law, 2000, 3);
  EXPECT_NEAR(dp.z_pmf[0], 1.0 / 3, 1e-12);
  EXPECT_NEAR(dp.z_pmf[1], 1.0 / 3, 1e-12);
  EXPECT_EQ(dp.z_pmf[2], 0.0);
  EXPECT_NEAR(dp.continuation, 1.0 / 3, 1e-12);
  EXPECT_TRUE(dp.warning); // continuation includes the defect
}

// Factorisation agrees with the absorption DP and with the Spitzer defect.
TEST(LadderHeight, RoutesAgree) {
  const std::vector<LatticeStepLaw> laws{
      LatticeStepLaw::from_pmf(-2, {0.3, 0.1, 0.2, 0.25, 0.15}),  // drifts down
      LatticeStepLaw::from_pmf(-1, {0.4, 0.1, 0.2, 0.3}),        // drifts up
      LatticeStepLaw::from_pmf(-2, {0.3, 0.0, 0.1, 0.0, 0.0, 0.0, 0.6}),
      LatticeStepLaw::from_pmf(-2, {0.5, 0.0, 0.0, 0.0, 0.5}),   // lattice span 2
      LatticeStepLaw::from_pmf(-3, {0.2, 0.25, 0.0, 0.1, 0.25, 0.2})};
  for (const auto& law : laws) {
    const auto exact = ladder_height_exact(law);
    EXPECT_NEAR(exact.total(), 1.0, 1e-9) << law.label();
    const auto dp = ladder_height_pmf(law, 6000, static_cast<std::size_t>(law.hi()));
    const auto drift = classify(law);
    for (std::size_t j = 0; j < exact.z_pmf.size(); ++j)
      EXPECT_NEAR(exact.z_pmf[j], dp.z_pmf[j], drift == DriftClass::oscillates ? 1e-2 : 1e-9)
          << law.label() << " j=" << j;
    if (drift == DriftClass::drifts_down) {
      const auto s = spitzer_series(law, 6000);
      EXPECT_NEAR(exact.z_defect, s.defect.mid(), 1e-9) << law.label();
      EXPECT_NEAR(dp.continuation, s.defect.mid(), 1e-9) << law.label();
    } else {
      EXPECT_NEAR(exact.z_defect, 0.0, 1e-12);
    }
  }
}

TEST(LadderHeight, RightContinuousHeightsAreZeroOrOne) {
  const auto law = LatticeStepLaw::from_pmf(-3, {0.1, 0.2, 0.3, 0.1, 0.3});
  const auto exact = ladder_height_exact(law);
  ASSERT_EQ(exact.z_pmf.size(), 2u);
  EXPECT_NEAR(exact.total(), 1.0, 1e-9);
}

TEST(LadderHeight, TruncatedLeftContinuousConserved) {
  const auto law = truncated(make_left_continuous(0.5, 0.5), 60);
  const auto exact = ladder_height_exact(law);
  EXPECT_NEAR(exact.total(), 1.0, 1e-9);
  const auto dp = ladder_height_pmf(law, 500, 60);
  EXPECT_NEAR(dp.total(), 1.0, 1e-12);
}

TEST(LadderHeight, Preconditions) {
  EXPECT_THROW(ladder_height_pmf(make_bernoulli_walk(0.5), 10, 0), precondition_error);
}

// V(x) = sum_n P(H_n <= x) by direct n-fold convolution.
static double renewal_by_convolution(const std::vector<double>& z, double x) {
  if (x < 0)
    return 0;
  const auto top = static_cast<std::size_t>(std::floor(x));
  std::vector<double> h(top + 1, 0.0);
  h[0] = 1.0;
  double v = 0;
  for (int n = 0; n < 5000; ++n) {
    double mass = 0;
    for (double m : h)
      mass += m;
    v += mass;
    if (mass < 1e-16)
      break;
    std::vector<double> next(top + 1, 0.0);
    for (std::size_t i = 0; i <= top; ++i)
      for (std::size_t j = 0; j < z.size() && i + j <= top; ++j)
        next[i + j] += h[i] * z[j];
    h.swap(next);
  }
  return v;
}

TEST(Renewal, BernoulliHalf) {
  const auto z = ladder_height_exact(make_bernoulli_walk(0.5));
  EXPECT_EQ(renewal_function(z, -0.5), 0.0);
  EXPECT_NEAR(renewal_function(z, 0.0), 2.0, 1e-12);
  EXPECT_NEAR(renewal_function(z, 0.5), 2.0, 1e-12);
  EXPECT_NEAR(renewal_function(z, 1.5), renewal_by_convolution(z.z_pmf, 1.5), 1e-10);
  EXPECT_NEAR(renewal_function(z, 1.5), 4.0, 1e-12);
  EXPECT_NEAR(renewal_function(z, 7.5), renewal_by_convolution(z.z_pmf, 7.5), 1e-10);
}

TEST(Renewal, GeneralLaws) {
  for (const auto& law : {LatticeStepLaw::from_pmf(-2, {0.3, 0.1, 0.2, 0.25, 0.15}),
                          LatticeStepLaw::from_pmf(-1, {0.3, 0.3, 0.1, 0.3})}) {
    const auto z = ladder_height_exact(law);
    for (double x : {0.0, 0.5, 1.5, 2.5, 6.5}) {
      const double v = renewal_function(z, x);
      EXPECT_GE(v, 1.0);
      EXPECT_NEAR(v, renewal_by_convolution(z.z_pmf, x), 1e-10) << law.label() << " " << x;
    }
    EXPECT_NEAR(renewal_function(z, 0.0), 1 / (1 - z.z_pmf[0]), 1e-12);
  }
  LadderHeightLaw stuck;
  stuck.z_pmf = {1.0};
  EXPECT_THROW(renewal_function(stuck, 1.0), numeric_error);
}
