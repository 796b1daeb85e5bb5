#pragma once

// The Mittag-Leffler distribution g_rho: moments m!/Gamma(1+m rho), Laplace
// transform E_rho(-s). g_0 is Exponential(1), g_{1/2} is the law of |N(0,2)|,
// g_1 is the point mass at 1.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "recwalk/errors.hpp"

namespace recwalk {

struct MLTarget {
  double rho = 0.5;
};

inline double ml_moment(double rho, int m) {
  require(m >= 0, "moment order must be nonnegative");
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  return std::exp(std::lgamma(m + 1.0) - std::lgamma(1.0 + m * rho));
}

/// E[M^2] / E[M]^2 = 2 Gamma(1+rho)^2 / Gamma(1+2 rho).
inline double ml_moment_ratio(double rho) {
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  return 2.0 * std::exp(2.0 * std::lgamma(1.0 + rho) - std::lgamma(1.0 + 2.0 * rho));
}

/// CDF of g_{1/2}, i.e. of |N(0,2)|.
inline double ml_cdf_half(double x) {
  if (x <= 0.0)
    return 0.0;
  return std::erf(0.5 * x);
}

/// Mittag-Leffler function E_rho(-s), s >= 0, 0 < rho < 1, from
///   E_rho(-s) = sin(pi rho)/(pi rho) int_0^inf exp(-(s u)^{1/rho}) / (u^2 + 2u cos(pi rho) + 1) du.
/// With w = (s u)^{1/rho} the exponential factor is e^{-w}; the remaining
/// w^{rho-1} endpoint singularity suits the exp-sinh rule.
inline double mittag_leffler_function_neg(double rho, double s) {
  require(rho > 0.0 && rho < 1.0, "integral form needs 0 < rho < 1");
  require(s >= 0.0, "argument must be nonnegative");
  if (s == 0.0)
    return 1.0;
  const double c = std::cos(std::numbers::pi * rho);
  auto f = [&](double w) {
    if (w == 0.0)
      return 0.0;
    const double u = std::pow(w, rho) / s;
    return rho * std::pow(w, rho - 1.0) * std::exp(-w) / ((u * u + 2.0 * u * c + 1.0) * s);
  };
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  const double integral = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15);
  return std::sin(std::numbers::pi * rho) / (std::numbers::pi * rho) * integral;
}

namespace detail {

/// Gaver-Stehfest weights for an even number of stages.
inline std::vector<double> stehfest_weights(int stages) {
  const int half = stages / 2;
  std::vector<double> v(static_cast<std::size_t>(stages) + 1, 0.0);
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  for (int k = 1; k <= stages; ++k) {
    double acc = 0.0;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j)
      acc += std::pow(j, half) * fact(2 * j) /
             (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    v[static_cast<std::size_t>(k)] = ((k + half) % 2 ? -1.0 : 1.0) * acc;
  }
  return v;
}

} // namespace detail

inline constexpr int kStehfestStages = 14;

/// Upper end of the validated x range for rho = 0.10, 0.15, ..., 0.90: the
/// largest x below which 14-stage inversion stays within 1e-5 of a reference
/// CDF, times 0.95. Beyond it the error grows to 6e-5 (rho = 0.1) through
/// 6e-2 (rho = 0.9).
inline constexpr std::array<double, 17> kValidatedXMax{
    1.99, 2.03, 2.07, 2.10, 1.36, 1.27, 1.23, 0.84, 0.75, 0.71, 0.48, 0.43, 0.41, 0.28, 0.25, 0.19, 0.16};

inline bool ml_cdf_validated(double rho, double x) {
  if (!(rho >= 0.1 && rho <= 0.9) || !(x > 0.0))
    return false;
  const double t = (rho - 0.1) / 0.05;
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), kValidatedXMax.size() - 1);
  const auto j = std::min(i + 1, kValidatedXMax.size() - 1);
  return x <= std::min(kValidatedXMax[i], kValidatedXMax[j]);
}

struct MLCdfValue {
  double value = 0;
  bool in_validated_band = true;
};

/// CDF of g_rho by Gaver-Stehfest inversion of E_rho(-s)/s. The endpoints
/// rho = 0 and rho = 1 are returned in closed form; elsewhere the flag tells
/// whether (rho, x) lies in the validated band.
inline MLCdfValue ml_cdf(double rho, double x) {
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  if (x <= 0.0)
    return {0.0, true};
  if (rho == 0.0)
    return {-std::expm1(-x), true};
  if (rho == 1.0)
    return {x >= 1.0 ? 1.0 : 0.0, true};
  static const auto weights = detail::stehfest_weights(kStehfestStages);
  const double ln2 = std::numbers::ln2;
  double acc = 0.0;
  for (int k = 1; k <= kStehfestStages; ++k) {
    const double s = k * ln2 / x;
    acc += weights[static_cast<std::size_t>(k)] * mittag_leffler_function_neg(rho, s) / s;
  }
  const double value = std::clamp(acc * ln2 / x, 0.0, 1.0);
  return {value, ml_cdf_validated(rho, x)};
}

/// Kolmogorov-Smirnov distance sup |F_n - F|. cdf_left(x) = F(x-) handles
/// targets with atoms; by default F is taken continuous.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf,
                          const std::function<double(double)>& cdf_left = {}) {
  require(!samples.empty(), "KS distance needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i])
      ++j;
    const double v = samples[i];
    const double f = cdf(v);
    const double fl = cdf_left ? cdf_left(v) : f;
    d = std::max({d, std::abs(f - static_cast<double>(j) / n), std::abs(fl - static_cast<double>(i) / n)});
    i = j;
  }
  return d;
}

} // namespace recwalk
