#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "recwalk/deviations.hpp"

using namespace recwalk;

namespace {

const RateProfile& bernoulli_half() {
  static const RateProfile p = make_rate_profile(spitzer_series(make_bernoulli_walk(0.5), 1600), 0.5);
  return p;
}

} // namespace

TEST(Lambda, ZeroWithoutDefect) {
  EXPECT_EQ(rate_lambda(bernoulli_half(), 0.0), 0.0);
  EXPECT_THROW(rate_lambda(bernoulli_half(), 0.1), precondition_error);
  const auto down = make_rate_profile(spitzer_series(make_bernoulli_walk(1.0 / 3), 400));
  EXPECT_THROW(rate_lambda(down, 0.0), precondition_error);
}

TEST(Lambda, MatchesLadderEpochSeries) {
  const auto& p = bernoulli_half();
  for (double lam : {-0.5, -1.0, -3.0}) {
    long double s = 0;
    for (std::size_t n = 1; n <= p.N; ++n)
      s += p.series.t[n] * std::exp(lam * static_cast<double>(n));
    EXPECT_NEAR(rate_lambda(p, lam), std::log(static_cast<double>(s)), 1e-12) << lam;
  }
}

TEST(Lambda, SingleTermDominance) {
  const auto& p = bernoulli_half();
  EXPECT_NEAR(rate_lambda(p, -30.0), -30.0 + std::log(p.series.q[1]), 1e-12);
}

TEST(Lambda, DerivativeMatchesFiniteDifference) {
  const auto& p = bernoulli_half();
  for (double lam : {-5.0, -1.0, -0.1, -0.01}) {
    const double h = 1e-6 * std::abs(lam);
    const double fd = (rate_lambda(p, lam + h) - rate_lambda(p, lam - h)) / (2 * h);
    EXPECT_NEAR(rate_lambda_prime(p, lam), fd, 1e-6 * fd) << lam;
  }
}

TEST(Lambda, Convex) {
  const auto& p = bernoulli_half();
  const double a = -20.0, b = -1e-3;
  const int n = 2000;
  const double h = (b - a) / n;
  for (int i = 1; i < n; ++i) {
    const double x = a + i * h;
    const double second = rate_lambda(p, x - h) - 2 * rate_lambda(p, x) + rate_lambda(p, x + h);
    ASSERT_GE(second, -1e-9) << x;
  }
}

TEST(Lambda, DerivativeEndpoints) {
  const auto& p = bernoulli_half();
  const double far = rate_lambda_prime(p, -20.0);
  EXPECT_GT(far, 1.0);
  EXPECT_LT(far, 1.01);
  // Near 0, 1 - E y^T ~ sqrt(1-y) / C with C = sqrt 2, so
  // Lambda'(l) ~ 1 / (2 sqrt 2 sqrt(1 - e^l)): about 354 at l = -1e-6 and
  // above 10^3 only from l ~ -1e-7 on.
  for (double lam : {-1e-6, -1e-8}) {
    const double asym = 1.0 / (2.0 * std::sqrt(2.0) * std::sqrt(-std::expm1(lam)));
    EXPECT_NEAR(rate_lambda_prime(p, lam), asym, 0.02 * asym) << lam;
  }
  EXPECT_GT(rate_lambda_prime(p, -1e-8), 1e3);
  double prev = 0;
  for (double lam = -20; lam < -1e-9; lam /= 2) {
    const double d = rate_lambda_prime(p, lam);
    EXPECT_GE(d, prev);
    prev = d;
  }
}

TEST(Legendre, CaseTable) {
  const auto& p = bernoulli_half();
  EXPECT_NEAR(legendre(p, 1.0).value, std::log(2.0), 1e-15);
  EXPECT_TRUE(std::isinf(legendre(p, 0.5).value));
  EXPECT_THROW(legendre(p, 0.0), precondition_error);
}

TEST(Legendre, GridOracle) {
  const auto& p = bernoulli_half();
  const auto r = legendre(p, 2.0);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_GT(r.value, 0.0);
  EXPECT_TRUE(std::isfinite(r.value));
  double best = -std::numeric_limits<double>::infinity();
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const double lam = -30.0 + (30.0 - 1e-6) * i / (n - 1.0);
    best = std::max(best, 2.0 * lam - rate_lambda(p, lam));
  }
  EXPECT_NEAR(r.value, best, 1e-6);
}

TEST(Legendre, Duality) {
  const auto& p = bernoulli_half();
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unif(-8.0, -1e-4);
  for (double y : {1.5, 2.0, 4.0, 9.0}) {
    const auto r = legendre(p, y);
    EXPECT_LT(r.residual, 1e-10) << y;
    EXPECT_NEAR(r.value, r.lambda * y - rate_lambda(p, r.lambda), 1e-8);
    for (int i = 0; i < 100; ++i) {
      const double lam = unif(gen);
      EXPECT_GE(r.value, lam * y - rate_lambda(p, lam) - 1e-12) << y << " " << lam;
    }
  }
}

TEST(Legendre, DriftingUp) {
  const auto p = make_rate_profile(spitzer_series(make_bernoulli_walk(2.0 / 3), 3000));
  ASSERT_EQ(p.drift, DriftClass::drifts_up);
  long double mean = 0;
  for (std::size_t n = 1; n <= p.N; ++n)
    mean += static_cast<long double>(n) * p.series.t[n];
  EXPECT_NEAR(p.e_t1, static_cast<double>(mean), 1e-9);
  EXPECT_NEAR(rate_lambda_prime(p, -1e-9), p.e_t1, 1e-6);
  const auto deg = legendre(p, p.e_t1 + 0.1);
  EXPECT_TRUE(deg.degenerate);
  EXPECT_EQ(deg.value, 0.0);
  const auto mid = legendre(p, 0.5 * (1 + p.e_t1));
  EXPECT_FALSE(mid.degenerate);
  EXPECT_GT(mid.value, 0.0);
  EXPECT_THROW(ldp_rate(p, 0.9 / p.e_t1), precondition_error);
  EXPECT_NO_THROW(ldp_rate(p, 1.1 / p.e_t1));
}

TEST(LdpRate, Values) {
  const auto& p = bernoulli_half();
  EXPECT_NEAR(ldp_rate(p, 1.0), std::log(2.0), 1e-15);
  double prev = ldp_rate(p, 1.0);
  for (double y : {0.75, 0.5, 0.2, 0.1, 0.05, 0.02}) {
    const double r = ldp_rate(p, y);
    EXPECT_LT(r, prev) << y;
    EXPECT_GT(r, 0.0);
    prev = r;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(LdpRate, RejectsDriftingDown) {
  const auto p = make_rate_profile(spitzer_series(make_bernoulli_walk(1.0 / 3), 400));
  EXPECT_THROW(ldp_rate(p, 0.5), precondition_error);
  EXPECT_THROW(exact_tail_logslope(p, 0.5, {100}), precondition_error);
}

TEST(TailSlope, AllRecordsClosedForm) {
  // R_n >= n leaves room for one down step, immediately undone: (n+1) 2^{-n}.
  const auto rows = exact_tail_logslope(bernoulli_half(), 1.0, {100, 400, 1600});
  double prev = 0;
  for (const auto& r : rows) {
    const double n = static_cast<double>(r.n);
    EXPECT_EQ(r.m, r.n);
    EXPECT_NEAR(r.slope, std::log(2.0) - std::log(n + 1) / n, 1e-10);
    EXPECT_GT(r.slope, prev);
    EXPECT_LT(r.slope, std::log(2.0));
    prev = r.slope;
  }
}

TEST(TailSlope, TrivialEvent) {
  const auto rows = exact_tail_logslope(bernoulli_half(), 1.0 / 100, {100});
  EXPECT_EQ(rows[0].m, 1u);
  EXPECT_EQ(rows[0].slope, 0.0);
}

TEST(TailSlope, ApproachesRate) {
  const auto& p = bernoulli_half();
  const double target = ldp_rate(p, 0.75);
  const auto rows = exact_tail_logslope(p, 0.75, {100, 400, 1600});
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_LT(std::abs(rows[i].slope - target), std::abs(rows[i - 1].slope - target));
  EXPECT_LT(std::abs(rows.back().slope - target), 0.15 * target);
}

TEST(Mdp, Rate) {
  EXPECT_NEAR(mdp_rate(0.5, 1.0), 0.25, 1e-15);
  EXPECT_NEAR(mdp_rate(0.0, 1.0), 1.0, 1e-15);
  EXPECT_EQ(mdp_rate(0.5, 0.0), 0.0);
  EXPECT_NEAR(mdp_rate(0.5, 2.0), 1.0, 1e-15);
  EXPECT_THROW(mdp_rate(1.0, 1.0), precondition_error);
}

// a(n) = (log n)^{1-rho}: -log P(R_n >= y C n^rho a(n)) / log n within a factor
// 2 of the rate at n = 10^4.
TEST(Mdp, ExactTailBand) {
  const std::size_t n = 10000;
  const auto s = spitzer_series(make_bernoulli_walk(0.5), n);
  const double rho = 0.5;
  const double ln = std::log(static_cast<double>(n));
  const double a = std::pow(ln, 1 - rho);
  const double c = c_rho(s.q, rho, static_cast<double>(n) / std::pow(a, 1 / (1 - rho))).value;
  for (double y : {1.0, 2.0}) {
    const auto m = static_cast<std::size_t>(std::ceil(y * c * std::sqrt(static_cast<double>(n)) * a));
    const double ratio = -log_record_tail(s.t, n, m) / ln / mdp_rate(rho, y);
    EXPECT_GT(ratio, 0.5) << y;
    EXPECT_LT(ratio, 2.0) << y;
  }
}

TEST(Lil, Constant) {
  EXPECT_NEAR(lil_constant(0.5), std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(lil_constant(0.999), 1.0, 0.01);
  EXPECT_THROW(lil_constant(1.0), precondition_error);
}

TEST(Lil, NormalizerGaussian) {
  const auto s = spitzer_series_symmetric_continuous(16);
  // Second composition with C = 1 written out directly.
  const double n = 1e6;
  const double g = std::tgamma(1.5);
  const double fn = std::sqrt(n) / g;
  const double ll = std::log(std::log(fn));
  const double expect = std::sqrt(n / ll) / g * ll;
  EXPECT_NEAR(lil_normalizer(s.q, 0.5, n), expect, 1e-9 * expect);
  EXPECT_THROW(lil_normalizer(s.q, 0.5, 10.0), precondition_error);
}

TEST(Lil, NormalizerWithSlowlyVaryingFactor) {
  const auto p = make_rate_profile(spitzer_series(make_bernoulli_walk(0.5), 20000));
  const double n = 1000;
  auto c = [&](double x) {
    long double acc = 0;
    for (std::size_t k = 1; k <= p.N; ++k)
      acc += std::pow(1 - 1 / x, static_cast<double>(k)) * (p.series.q[k] - 0.5) / static_cast<double>(k);
    return std::exp(static_cast<double>(acc));
  };
  auto f = [&](double x) { return std::sqrt(x) * c(x) / std::tgamma(1.5); };
  const double ll = std::log(std::log(f(n)));
  EXPECT_NEAR(lil_normalizer(p, 0.5, n), f(n / ll) * ll, 1e-10);
}

TEST(Lil, WindowSupMatchesFullScan) {
  const auto s = spitzer_series_symmetric_continuous(16);
  for (std::uint64_t r = 0; r < 5; ++r) {
    Stream a(3, r, kStepSubstream), b(3, r, kStepSubstream);
    const auto w = lil_window_sup(make_gaussian(1.0), s.q, 0.5, 100, 5000, a);
    double sum = 0, mx = 0, best = 0;
    std::uint64_t rec = 1, at = 0;
    for (std::uint64_t k = 1; k <= 5000; ++k) {
      sum += b.normal();
      if (sum >= mx) {
        mx = sum;
        ++rec;
      }
      if (k >= 100) {
        const double v = static_cast<double>(rec) / lil_normalizer(s.q, 0.5, static_cast<double>(k));
        if (v > best) {
          best = v;
          at = k;
        }
      }
    }
    EXPECT_EQ(w.sup, best);
    EXPECT_EQ(w.at_n, at);
    EXPECT_EQ(w.r_end, rec);
  }
  Stream c(1, 0, 0);
  EXPECT_THROW(lil_window_sup(make_gaussian(1.0), s.q, 0.5, 10, 100, c), precondition_error);
}
