#pragma once

// Walk-increment and waiting-time distributions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/rng.hpp"

namespace recwalk {

/// Integer-valued increment law on a finite window [lo(), hi()].
///
/// Values are immutable and cheap to copy (shared storage). Sampling is by
/// inverse CDF with a guide table, so the cost stays O(1) on average even for
/// windows of tens of millions of points.
class LatticeStepLaw {
public:
  /// Builds a law from probabilities on lo, lo+1, ... Zero mass at either end is
  /// trimmed, the remainder is renormalised to sum to one.
  static LatticeStepLaw from_pmf(std::int64_t lo, std::vector<double> pmf,
                                 double truncation_mass = 0.0,
                                 std::string label = "lattice") {
    return LatticeStepLaw(lo, std::move(pmf), truncation_mass, std::move(label), false);
  }

  /// A constant step. Degenerate, so only meant for boundary checks.
  static LatticeStepLaw point_mass(std::int64_t value) {
    return LatticeStepLaw(value, {1.0}, 0.0, "point:" + std::to_string(value), true);
  }

  std::int64_t lo() const { return data_->lo; }
  std::int64_t hi() const { return data_->lo + static_cast<std::int64_t>(data_->pmf.size()) - 1; }
  std::size_t width() const { return data_->pmf.size(); }

  double pmf(std::int64_t k) const {
    if (k < lo() || k > hi())
      return 0.0;
    return data_->pmf[static_cast<std::size_t>(k - lo())];
  }
  std::span<const double> pmf() const { return data_->pmf; }

  /// Mass discarded (before renormalisation) when an infinite family was cut.
  double truncation_mass() const { return data_->truncation_mass; }
  bool degenerate() const { return data_->degenerate; }
  double mean() const { return data_->mean; }
  /// Mean of the untruncated family when the law is a truncation of one,
  /// otherwise the mean of the stored pmf. Drift classification uses this.
  double drift() const { return data_->nominal_mean.value_or(data_->mean); }
  LatticeStepLaw with_nominal_mean(double m) const {
    auto copy = std::make_shared<Data>(*data_);
    copy->nominal_mean = m;
    LatticeStepLaw out = *this;
    out.data_ = std::move(copy);
    return out;
  }
  const std::string& label() const { return data_->label; }

  /// Number of support points carrying positive mass.
  std::size_t support_size() const { return data_->support_size; }

  std::int64_t from_uniform(double u) const {
    const auto& d = *data_;
    const auto buckets = d.guide.size() - 1;
    auto g = static_cast<std::size_t>(u * static_cast<double>(buckets));
    g = std::min(g, buckets - 1);
    const auto first = d.cdf.begin() + d.guide[g];
    const auto last = d.cdf.begin() + d.guide[g + 1] + 1;
    auto it = std::upper_bound(first, last, u);
    if (it == d.cdf.end())
      --it;
    return d.lo + (it - d.cdf.begin());
  }

  std::int64_t sample(Stream& stream) const {
    if (data_->degenerate)
      return data_->lo;
    return from_uniform(stream.uniform());
  }

private:
  struct Data {
    std::int64_t lo = 0;
    std::vector<double> pmf;
    std::vector<double> cdf;
    std::vector<std::uint32_t> guide;
    double truncation_mass = 0.0;
    double mean = 0.0;
    std::optional<double> nominal_mean;
    std::size_t support_size = 0;
    std::string label;
    bool degenerate = false;
  };

  LatticeStepLaw(std::int64_t lo, std::vector<double> pmf, double truncation_mass,
                 std::string label, bool allow_degenerate) {
    require(!pmf.empty(), "lattice law needs a nonempty pmf");
    require(truncation_mass >= 0.0 && truncation_mass < 1.0,
            "truncation mass must lie in [0,1)");
    // Compensated: the truncated families sum tens of millions of terms.
    double total = 0.0, total_comp = 0.0;
    for (double p : pmf) {
      require(std::isfinite(p) && p >= 0.0, "pmf entries must be finite and nonnegative");
      const double t = total + p;
      total_comp += total >= p ? (total - t) + p : (p - t) + total;
      total = t;
    }
    total += total_comp;
    require(total > 0.0, "pmf has no mass");

    std::size_t first = 0;
    while (pmf[first] == 0.0)
      ++first;
    std::size_t last = pmf.size() - 1;
    while (pmf[last] == 0.0)
      --last;

    auto data = std::make_shared<Data>();
    data->lo = lo + static_cast<std::int64_t>(first);
    data->pmf.assign(pmf.begin() + static_cast<std::ptrdiff_t>(first),
                     pmf.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    for (double& p : data->pmf)
      p /= total;
    data->support_size = static_cast<std::size_t>(
        std::count_if(data->pmf.begin(), data->pmf.end(), [](double p) { return p > 0.0; }));
    data->degenerate = data->support_size < 2;
    if (data->degenerate && !allow_degenerate)
      throw precondition_error("lattice law is degenerate (needs two support points)");

    data->truncation_mass = truncation_mass;
    data->label = std::move(label);

    // Neumaier-compensated mean and cdf.
    double mean = 0.0, comp = 0.0;
    data->cdf.resize(data->pmf.size());
    double acc = 0.0, acc_comp = 0.0;
    for (std::size_t i = 0; i < data->pmf.size(); ++i) {
      const double term = data->pmf[i] * static_cast<double>(data->lo + static_cast<std::int64_t>(i));
      const double t = mean + term;
      comp += std::abs(mean) >= std::abs(term) ? (mean - t) + term : (term - t) + mean;
      mean = t;
      const double a = acc + data->pmf[i];
      acc_comp += std::abs(acc) >= data->pmf[i] ? (acc - a) + data->pmf[i] : (data->pmf[i] - a) + acc;
      acc = a;
      data->cdf[i] = acc + acc_comp;
    }
    data->mean = mean + comp;
    data->cdf.back() = 1.0;

    const std::size_t buckets = std::clamp<std::size_t>(data->pmf.size(), 16, 4096);
    data->guide.resize(buckets + 1);
    std::size_t i = 0;
    for (std::size_t g = 0; g < buckets; ++g) {
      const double level = static_cast<double>(g) / static_cast<double>(buckets);
      while (i + 1 < data->cdf.size() && data->cdf[i] <= level)
        ++i;
      data->guide[g] = static_cast<std::uint32_t>(i);
    }
    data->guide[buckets] = static_cast<std::uint32_t>(data->cdf.size() - 1);
    data_ = std::move(data);
  }

  std::shared_ptr<const Data> data_;
};

enum class ContinuousFamily { gaussian, uniform_symmetric, cauchy };

/// Continuous law symmetric about zero; every member has P(S_k >= 0) = 1/2.
struct ContinuousStepLaw {
  ContinuousFamily family = ContinuousFamily::gaussian;
  double scale = 1.0; // sigma, half-width or Cauchy scale

  double sample(Stream& stream) const {
    switch (family) {
    case ContinuousFamily::gaussian:
      return scale * stream.normal();
    case ContinuousFamily::uniform_symmetric:
      return scale * (2.0 * stream.uniform() - 1.0);
    case ContinuousFamily::cauchy:
      return scale * std::tan(std::numbers::pi * (stream.uniform() - 0.5));
    }
    return 0.0;
  }

  std::string label() const {
    switch (family) {
    case ContinuousFamily::gaussian:
      return "gaussian";
    case ContinuousFamily::uniform_symmetric:
      return "uniform";
    case ContinuousFamily::cauchy:
      return "cauchy";
    }
    return "?";
  }
};

using StepLaw = std::variant<LatticeStepLaw, ContinuousStepLaw>;

enum class WaitingFamily { pareto, exponential, deterministic };

/// Waiting time between CTRW jumps.
struct WaitingLaw {
  WaitingFamily family = WaitingFamily::deterministic;
  double alpha = 0.0; // pareto tail index, in (0,1)
  double scale = 1.0; // pareto scale, exponential mean, or the constant wait

  /// Inverse-CDF map from u in (0,1].
  double from_uniform(double u) const {
    switch (family) {
    case WaitingFamily::pareto:
      return scale * std::pow(u, -1.0 / alpha);
    case WaitingFamily::exponential:
      return -scale * std::log(u);
    case WaitingFamily::deterministic:
      return scale;
    }
    return scale;
  }

  /// P(Y > x).
  double tail(double x) const {
    switch (family) {
    case WaitingFamily::pareto:
      return x < scale ? 1.0 : std::pow(x / scale, -alpha);
    case WaitingFamily::exponential:
      return x < 0 ? 1.0 : std::exp(-x / scale);
    case WaitingFamily::deterministic:
      return x < scale ? 1.0 : 0.0;
    }
    return 0.0;
  }

  /// L1 in 1 - G(x) ~ x^{-alpha} L1(x) / Gamma(1-alpha); constant for pareto.
  double slowly_varying_constant() const {
    require(family == WaitingFamily::pareto, "only pareto waits have a stable tail");
    return std::tgamma(1.0 - alpha) * std::pow(scale, alpha);
  }
};

// ---------------------------------------------------------------------------
// Factories

inline LatticeStepLaw make_bernoulli_walk(double p) {
  require(p > 0.0 && p < 1.0, "bernoulli walk needs 0 < p < 1");
  return LatticeStepLaw::from_pmf(-1, {1.0 - p, 0.0, p}, 0.0,
                                  "bernoulli:" + std::to_string(p));
}

inline constexpr std::size_t kDefaultMaxSupport = std::size_t{1} << 25;

/// Left-continuous law with generating function
///   phi(s) = sum_k p_k s^{k+1} = s + gamma/(1+beta) (1-s)^{1+beta}.
/// The upper support is cut at the smallest K whose residual mass is below
/// eps (or at max_support_hi, whichever comes first) and renormalised.
inline LatticeStepLaw make_left_continuous(double beta, double gamma, double eps = 1e-12,
                                           std::size_t max_support_hi = kDefaultMaxSupport) {
  require(beta > 0.0 && beta < 1.0, "left-continuous law needs beta in (0,1)");
  require(gamma > 0.0 && gamma < 1.0, "left-continuous law needs gamma in (0,1)");
  require(eps > 0.0 && eps < 1.0, "truncation eps must lie in (0,1)");
  require(max_support_hi >= 1, "left-continuous law needs support up to at least 1");

  const double a = 1.0 + beta;
  const double kappa = gamma / (1.0 + beta);
  // c_j = [s^j](1-s)^a, partial_j = sum_{i<=j} c_i = prod_{i=1}^{j} (i-a)/i.
  double c = -a;             // c_1
  double partial = 1.0 - a;  // partial_1
  std::vector<double> pmf{kappa, 1.0 - gamma};
  double residual = 0.0;
  for (std::size_t k = 1;; ++k) {
    const auto j = static_cast<double>(k + 1);
    c *= (j - 1.0 - a) / j;
    partial *= (j - a) / j;
    pmf.push_back(kappa * c);
    residual = -kappa * partial;
    if (residual < eps || k >= max_support_hi)
      break;
  }
  // phi'(1) = 1, so the family itself has mean zero.
  return LatticeStepLaw::from_pmf(-1, std::move(pmf), residual,
                                  "left_continuous:" + std::to_string(beta) + "," +
                                      std::to_string(gamma))
      .with_nominal_mean(0.0);
}

/// Mirror image x -> -x of a lattice law.
inline LatticeStepLaw mirrored(const LatticeStepLaw& law) {
  std::vector<double> pmf(law.pmf().rbegin(), law.pmf().rend());
  auto out = LatticeStepLaw::from_pmf(-law.hi(), std::move(pmf), law.truncation_mass(),
                                      "mirror(" + law.label() + ")");
  return law.drift() == law.mean() ? out : out.with_nominal_mean(-law.drift());
}

/// Cuts the support at max_hi and renormalises; discarded mass accumulates
/// into truncation_mass.
inline LatticeStepLaw truncated(const LatticeStepLaw& law, std::int64_t max_hi) {
  require(max_hi > law.lo(), "truncation would leave a point mass");
  if (max_hi >= law.hi())
    return law;
  const auto keep = static_cast<std::size_t>(max_hi - law.lo() + 1);
  std::vector<double> pmf(law.pmf().begin(), law.pmf().begin() + static_cast<std::ptrdiff_t>(keep));
  double cut = 0.0;
  for (std::size_t i = law.width(); i-- > keep;)
    cut += law.pmf()[i];
  const double mass = law.truncation_mass() + cut * (1.0 - law.truncation_mass());
  return LatticeStepLaw::from_pmf(law.lo(), std::move(pmf), mass,
                                  law.label() + "|<=" + std::to_string(max_hi));
}

inline ContinuousStepLaw make_gaussian(double sigma) {
  require(sigma > 0.0, "gaussian needs sigma > 0");
  return {ContinuousFamily::gaussian, sigma};
}
inline ContinuousStepLaw make_uniform_symmetric(double half_width) {
  require(half_width > 0.0, "uniform needs half-width > 0");
  return {ContinuousFamily::uniform_symmetric, half_width};
}
inline ContinuousStepLaw make_cauchy(double scale) {
  require(scale > 0.0, "cauchy needs scale > 0");
  return {ContinuousFamily::cauchy, scale};
}

inline WaitingLaw make_pareto(double alpha, double scale) {
  require(alpha > 0.0 && alpha < 1.0, "pareto waits need alpha in (0,1)");
  require(scale > 0.0, "pareto waits need scale > 0");
  return {WaitingFamily::pareto, alpha, scale};
}
inline WaitingLaw make_exponential_wait(double mean) {
  require(mean > 0.0, "exponential waits need mean > 0");
  return {WaitingFamily::exponential, 0.0, mean};
}
inline WaitingLaw make_deterministic_wait(double value) {
  require(value > 0.0, "deterministic waits must be positive");
  return {WaitingFamily::deterministic, 0.0, value};
}

// ---------------------------------------------------------------------------
// Sampling

inline double sample_step(const StepLaw& law, Stream& stream) {
  return std::visit([&](const auto& l) { return static_cast<double>(l.sample(stream)); }, law);
}

inline double sample_waiting(const WaitingLaw& law, Stream& stream) {
  if (law.family == WaitingFamily::deterministic)
    return law.scale;
  return law.from_uniform(stream.uniform());
}

inline std::string label_of(const StepLaw& law) {
  return std::visit([](const auto& l) { return std::string(l.label()); }, law);
}

} // namespace recwalk
