#pragma once

// Rate functions for the record count: Lambda(l) = log E e^{l T_1} on l <= 0,
// its Legendre transform, the LDP/MDP rates, and the LIL constant and
// normaliser. Exact tail slopes come from the exact engine for comparison.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/rng.hpp"
#include "recwalk/step_laws.hpp"

namespace recwalk {

struct RateProfile {
  SpitzerSeries series;
  std::size_t N = 0;
  DriftClass drift = DriftClass::oscillates;
  double e_t1 = std::numeric_limits<double>::infinity(); // E(T_1)
  double defect = 0;                                      // P(T_1 = infinity), mid value
  double p_step_nonneg = 0;                               // P(X_1 >= 0) = q_1
  double closure_q = 0; // q_k assumed beyond the horizon when l is close to 0
};

/// q_limit, when known (lim P(S_k >= 0) = rho), closes the series past the
/// horizon; otherwise the last two terms are averaged, which absorbs the parity
/// pattern of lattice walks but keeps their O(k^{-1/2}) bias.
inline RateProfile make_rate_profile(SpitzerSeries s, std::optional<double> q_limit = std::nullopt) {
  require(s.N >= 2, "rate profile needs a horizon of at least 2");
  RateProfile p;
  p.N = s.N;
  p.drift = s.drift;
  p.defect = s.defect.mid();
  p.p_step_nonneg = s.q[1];
  p.closure_q = q_limit ? *q_limit : 0.5 * (s.q[s.N] + s.q[s.N - 1]);
  if (s.drift == DriftClass::drifts_up) {
    long double acc = 0;
    for (std::size_t k = s.N; k >= 1; --k)
      acc += (1.0L - s.q[k]) / static_cast<long double>(k);
    p.e_t1 = std::exp(static_cast<double>(acc));
  }
  p.series = std::move(s);
  return p;
}

namespace detail {

/// G(l) = sum_k e^{lk} q_k / k and G'(l) = sum_k e^{lk} q_k. Terms stop once
/// e^{lk}/k < 1e-17 e^{l}, relative to the first term: an absolute 1e-16 cut
/// keeps a single term at l = -20 and loses Lambda' - 1 ~ 1e-9 entirely. Past
/// the horizon q_k is replaced by the closure value.
inline void rate_sums(const RateProfile& p, double lam, double& g, double& dg) {
  const auto& q = p.series.q;
  const double y = std::exp(lam);
  long double s = 0, ds = 0, harmonic = 0;
  double yk = 1.0;
  bool closed = true;
  for (std::size_t k = 1;; ++k) {
    if (k > p.N) {
      closed = false;
      break;
    }
    yk *= y;
    const double kk = static_cast<double>(k);
    if (yk / kk < 1e-17 * y)
      break;
    s += yk * q[k] / kk;
    ds += yk * q[k];
    harmonic += yk / kk;
  }
  if (!closed) {
    // sum_{k>N} y^k/k = -log(1-y) - sum_{k<=N} y^k/k; sum_{k>N} y^k = y^{N+1}/(1-y).
    const double one_minus_y = -std::expm1(lam);
    const double tail = -std::log(one_minus_y) - static_cast<double>(harmonic);
    s += p.closure_q * std::max(tail, 0.0);
    ds += p.closure_q * std::pow(y, static_cast<double>(p.N + 1)) / one_minus_y;
  }
  g = static_cast<double>(s);
  dg = static_cast<double>(ds);
}

} // namespace detail

/// Lambda(l) = log[1 - exp(-sum_k e^{lk} P(S_k >= 0)/k)], l <= 0.
inline double rate_lambda(const RateProfile& p, double lam) {
  require(lam <= 0.0, "Lambda is only defined for lambda <= 0 (E e^{lambda T_1} may be infinite)");
  if (lam == 0.0) {
    require(p.defect == 0.0, "Lambda(0) needs a proper ladder epoch (zero defect)");
    return 0.0;
  }
  double g = 0, dg = 0;
  detail::rate_sums(p, lam, g, dg);
  return std::log(-std::expm1(-g));
}

/// Lambda'(l) = G'(l) / (e^{G(l)} - 1), l < 0.
inline double rate_lambda_prime(const RateProfile& p, double lam) {
  require(lam < 0.0, "Lambda' is evaluated for lambda < 0");
  double g = 0, dg = 0;
  detail::rate_sums(p, lam, g, dg);
  return dg / std::expm1(g);
}

struct LegendreResult {
  double value = 0;
  double lambda = 0;          // maximiser (NaN when the sup is a limit)
  double residual = 0;        // |Lambda'(lambda) - y|
  bool degenerate = false;    // y >= E(T_1) for a walk drifting up: rate 0
};

/// Lambda*(y) = sup_{l <= 0} (l y - Lambda(l)).
inline LegendreResult legendre(const RateProfile& p, double y) {
  require(y > 0.0, "Legendre transform needs y > 0");
  LegendreResult r;
  r.lambda = std::numeric_limits<double>::quiet_NaN();
  if (y < 1.0) {
    r.value = std::numeric_limits<double>::infinity();
    return r;
  }
  if (y == 1.0) {
    r.value = -std::log(p.p_step_nonneg);
    return r;
  }
  if (p.drift == DriftClass::drifts_up && y >= p.e_t1) {
    r.value = 0.0;
    r.degenerate = true;
    return r;
  }
  // Lambda' increases from 1 (l -> -inf) to E(T_1) (l -> 0-).
  double lo = -1.0;
  while (rate_lambda_prime(p, lo) >= y) {
    lo *= 2.0;
    if (lo < -700.0) {
      // y - 1 is below double resolution of Lambda' - 1: the sup is the y = 1 limit.
      r.value = -std::log(p.p_step_nonneg);
      return r;
    }
  }
  double hi = -1e-3;
  while (rate_lambda_prime(p, hi) <= y) {
    hi *= 0.1;
    if (hi > -1e-15)
      throw numeric_error("Lambda' does not reach y = " + std::to_string(y) +
                          " before lambda = 0 within the series horizon");
  }
  if (lo > hi)
    lo = 2.0 * hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rate_lambda_prime(p, mid) < y ? lo : hi) = mid;
  }
  const double lam = 0.5 * (lo + hi);
  r.lambda = lam;
  r.residual = std::abs(rate_lambda_prime(p, lam) - y);
  r.value = lam * y - rate_lambda(p, lam);
  return r;
}

/// lim (1/n) log P(R_n >= n y) = -y Lambda*(1/y), 0 < y <= 1.
inline double ldp_rate(const RateProfile& p, double y) {
  require(y > 0.0 && y <= 1.0, "LDP rate needs y in (0, 1]");
  require(p.drift != DriftClass::drifts_down,
          "large deviations of R_n are meaningless for a walk drifting to -infinity (R_infinity is finite)");
  if (p.drift == DriftClass::drifts_up)
    require(y > 1.0 / p.e_t1, "LDP rate for a walk drifting up needs y > 1/E(T_1)");
  return y * legendre(p, 1.0 / y).value;
}

/// Moderate-deviation rate (1 - rho)(rho^rho y)^{1/(1-rho)}.
inline double mdp_rate(double rho, double y) {
  require(rho >= 0.0 && rho < 1.0, "MDP rate needs rho in [0, 1)");
  require(y >= 0.0, "MDP rate needs y >= 0");
  return (1.0 - rho) * std::pow(std::pow(rho, rho) * y, 1.0 / (1.0 - rho));
}

/// Gamma(rho+1) / (rho^rho (1-rho)^{1-rho}).
/// -log P(R_n >= y C n^rho a(n)) / log n with a(n) = (log n)^{1-rho} and C
/// evaluated at 1 - a(n)^{1/(1-rho)}/n; compare with mdp_rate(rho, y).
inline double mdp_exact_rate(const SpitzerSeries& s, double rho, std::size_t n, double y) {
  require(n >= 3 && n <= s.N, "mdp exact rate needs 3 <= n <= series horizon");
  require(rho >= 0.0 && rho < 1.0 && y > 0.0, "mdp exact rate needs rho in [0, 1) and y > 0");
  const double ln = std::log(static_cast<double>(n));
  const double a = std::pow(ln, 1 - rho);
  const double cc = c_rho(s.q, rho, static_cast<double>(n) / std::pow(a, 1 / (1 - rho))).value;
  const auto m = static_cast<std::size_t>(std::ceil(y * cc * std::pow(static_cast<double>(n), rho) * a));
  return -log_record_tail(s.t, n, m) / ln;
}

inline double lil_constant(double rho) {
  require(rho > 0.0 && rho < 1.0, "LIL constant needs rho in (0, 1)");
  return std::tgamma(rho + 1.0) / (std::pow(rho, rho) * std::pow(1.0 - rho, 1.0 - rho));
}

/// f(x) = x^rho C_rho(1 - 1/x) / Gamma(rho + 1).
inline double lil_f(const std::vector<double>& q, double rho, double x) {
  return std::pow(x, rho) * c_rho(q, rho, x).value / std::tgamma(rho + 1.0);
}

/// f(n / loglog f(n)) loglog f(n), composed literally.
inline double lil_normalizer(const std::vector<double>& q, double rho, double n) {
  require(rho > 0.0 && rho < 1.0, "LIL normaliser needs rho in (0, 1)");
  require(n >= 16.0, "LIL normaliser needs n >= 16");
  const double fn = lil_f(q, rho, n);
  require(fn > std::numbers::e, "LIL normaliser needs f(n) > e so that loglog f(n) > 0");
  const double ll = std::log(std::log(fn));
  const double shrunk = n / ll;
  require(shrunk >= 1.0, "LIL normaliser: n / loglog f(n) fell below 1");
  return lil_f(q, rho, shrunk) * ll;
}

inline double lil_normalizer(const RateProfile& p, double rho, double n) {
  return lil_normalizer(p.series.q, rho, n);
}

struct LilWindowSup {
  double sup = 0;          // max of R_n / lil_normalizer(n) over the window
  std::uint64_t at_n = 0;  // where it is attained
  std::uint64_t r_end = 1; // R at the end of the walk
};

/// One walk of n_end steps; R_n / normalizer(n) over n_start <= n <= n_end.
/// The normaliser increases in n, so between records the ratio falls and the
/// sup is taken at n_start or at a record time.
inline LilWindowSup lil_window_sup(const StepLaw& law, const std::vector<double>& q, double rho,
                                   std::uint64_t n_start, std::uint64_t n_end, Stream& stream) {
  require(n_start >= 16 && n_start <= n_end, "LIL window needs 16 <= n_start <= n_end");
  LilWindowSup out;
  double s = 0, m = 0;
  std::uint64_t r = 1;
  auto eval = [&](std::uint64_t n) {
    const double v = static_cast<double>(r) / lil_normalizer(q, rho, static_cast<double>(n));
    if (v > out.sup) {
      out.sup = v;
      out.at_n = n;
    }
  };
  for (std::uint64_t k = 1; k <= n_end; ++k) {
    s += sample_step(law, stream);
    const bool record = s >= m;
    if (record) {
      m = s;
      ++r;
    }
    if (k == n_start || (record && k > n_start))
      eval(k);
  }
  out.r_end = r;
  return out;
}

struct TailSlope {
  std::size_t n = 0;
  std::size_t m = 0;      // ceil(y n)
  double log_tail = 0;    // log P(R_n >= m)
  double slope = 0;       // -(1/n) log P(R_n >= m)
};

/// -(1/n) log P(R_n >= ceil(y n)) from the exact ladder-epoch law.
inline std::vector<TailSlope> exact_tail_logslope(const RateProfile& p, double y,
                                                  const std::vector<std::size_t>& n_grid) {
  require(p.drift != DriftClass::drifts_down,
          "exact tail slopes are for walks that do not drift to -infinity");
  require(y > 0.0 && y <= 1.0, "tail slope needs y in (0, 1]");
  std::vector<TailSlope> out;
  for (std::size_t n : n_grid) {
    require(n >= 1 && n <= p.N, "n beyond the exact-engine horizon");
    TailSlope row;
    row.n = n;
    const double yn = y * static_cast<double>(n);
    row.m = static_cast<std::size_t>(std::ceil(yn - 1e-9 * std::max(1.0, yn)));
    row.log_tail = log_record_tail(p.series.t, n, row.m);
    row.slope = -row.log_tail / static_cast<double>(n);
    out.push_back(row);
  }
  return out;
}

} // namespace recwalk
