#pragma once

// Exact (double precision) fluctuation quantities of lattice walks:
// exceedance probabilities q_k = P(S_k >= 0), the coefficients of
// exp(sum q_k y^k / k) and its reciprocal, the ladder-epoch law, record-count
// laws and the slowly varying factor C_rho.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "recwalk/errors.hpp"
#include "recwalk/step_laws.hpp"

namespace recwalk {

struct Interval {
  double lo = 0;
  double hi = 0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

enum class DriftClass { oscillates, drifts_up, drifts_down };

inline const char* to_string(DriftClass c) {
  switch (c) {
  case DriftClass::oscillates: return "oscillates";
  case DriftClass::drifts_up: return "drifts_up";
  case DriftClass::drifts_down: return "drifts_down";
  }
  return "?";
}

/// Finite-mean classification by the sign of E X (exact zero for symmetric
/// lattice laws; the nominal mean for truncated families).
inline DriftClass classify(const LatticeStepLaw& law) {
  const double m = law.drift();
  if (std::abs(m) <= 1e-14)
    return DriftClass::oscillates;
  return m > 0 ? DriftClass::drifts_up : DriftClass::drifts_down;
}

// ---------------------------------------------------------------------------
// Exceedance probabilities

struct ExceedanceTable {
  std::vector<double> q;        // q[k] = P(S_k >= 0), q[0] = 1
  std::vector<double> q_strict; // P(S_k > 0), q_strict[0] = 0
};

inline constexpr double kDefaultCellCap = 2e10;

/// Convolution DP for the law of S_k, k <= N. Positions that can no longer
/// change sign before step N are folded into two absorbing buckets, so the live
/// window never exceeds about N * (hi - lo) / 2 cells.
inline ExceedanceTable exceedance_probs(const LatticeStepLaw& law, std::size_t N,
                                        double cell_cap = kDefaultCellCap) {
  require(N >= 1, "exceedance horizon must be >= 1");
  const auto W = law.width();
  require(static_cast<double>(N) * static_cast<double>(W) <= cell_cap,
          "horizon x support width exceeds the cell cap");
  const auto p = law.pmf();
  const std::int64_t lo = law.lo(), hi = law.hi();
  const std::int64_t down = std::min<std::int64_t>(lo, 0);
  const std::int64_t up = std::max<std::int64_t>(hi, 0);

  std::vector<double> suffix(W);
  for (std::size_t i = W; i-- > 0;)
    suffix[i] = p[i] + (i + 1 < W ? suffix[i + 1] : 0.0);

  const auto n = static_cast<std::int64_t>(N);
  // Live window after k steps.
  auto window = [&](std::int64_t k) {
    const std::int64_t sure_high = -(n - k) * down; // x > this stays > 0
    const std::int64_t sure_low = -(n - k) * up;    // x < this stays < 0
    return std::pair{std::max(k * lo, sure_low), std::min(k * hi, sure_high)};
  };

  ExceedanceTable out;
  out.q.assign(N + 1, 0.0);
  out.q_strict.assign(N + 1, 0.0);
  out.q[0] = 1.0;

  auto [cl, ch] = window(0);
  std::vector<double> cur(static_cast<std::size_t>(ch - cl + 1), 0.0), next;
  cur[static_cast<std::size_t>(-cl)] = 1.0;
  double high = 0.0;

  for (std::int64_t k = 0; k < n; ++k) {
    const auto [nl, nh] = window(k + 1);
    next.assign(static_cast<std::size_t>(std::max<std::int64_t>(nh - nl + 1, 0)), 0.0);
    for (std::int64_t x = cl; x <= ch; ++x) {
      const double m = cur[static_cast<std::size_t>(x - cl)];
      if (m == 0.0)
        continue;
      const std::int64_t a = nl - (x + lo); // first pmf index landing in the window
      const std::int64_t b = nh - (x + lo); // last; indices above b land surely high
      const std::int64_t top = static_cast<std::int64_t>(W) - 1;
      if (b + 1 <= top)
        high += m * suffix[static_cast<std::size_t>(std::max<std::int64_t>(b + 1, 0))];
      const std::int64_t jl = std::max<std::int64_t>(a, 0);
      const std::int64_t jh = std::min<std::int64_t>(b, top);
      if (jl > jh)
        continue;
      double* dst = next.data() + (x + lo + jl - nl);
      const double* src = p.data() + jl;
      for (std::int64_t j = 0, cnt = jh - jl + 1; j < cnt; ++j)
        dst[j] += m * src[j];
    }
    double nonneg = 0.0, pos = 0.0;
    for (std::int64_t x = std::max<std::int64_t>(nl, 0); x <= nh; ++x) {
      const double m = next[static_cast<std::size_t>(x - nl)];
      nonneg += m;
      if (x > 0)
        pos += m;
    }
    const auto k1 = static_cast<std::size_t>(k + 1);
    out.q[k1] = std::min(1.0, high + nonneg);
    out.q_strict[k1] = std::min(1.0, high + pos);
    cur.swap(next);
    cl = nl;
    ch = nh;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Power-series helpers (truncated to a fixed length, O(N^2)).

namespace series {

/// log g for g[0] = 1.
inline std::vector<double> log1(const std::vector<double>& g) {
  const std::size_t N = g.size();
  std::vector<double> l(N, 0.0);
  for (std::size_t n = 1; n < N; ++n) {
    double acc = static_cast<double>(n) * g[n];
    for (std::size_t k = 1; k < n; ++k)
      acc -= static_cast<double>(k) * l[k] * g[n - k];
    l[n] = acc / static_cast<double>(n);
  }
  return l;
}

/// num / den with den[0] != 0.
inline std::vector<double> divide(const std::vector<double>& num, const std::vector<double>& den) {
  const std::size_t N = num.size();
  std::vector<double> r(N, 0.0);
  for (std::size_t n = 0; n < N; ++n) {
    double acc = num[n];
    for (std::size_t k = 1; k <= n && k < den.size(); ++k)
      acc -= den[k] * r[n - k];
    r[n] = acc / den[0];
  }
  return r;
}

} // namespace series

/// Second exact route for the left-continuous family
/// phi(s) = s + gamma/(1+beta) (1-s)^{1+beta}, untruncated.
///
/// The first passage below zero has generating function f(u), the root of
/// f = u phi(f); with g = 1 - f this reads f_n = f_{n-1} + kappa [u^{n-1}] g^{1+beta}.
/// Then sum_k u^k P(S_k < 0)/k = -log g(u), and by Lagrange inversion
/// sum_k u^k P(S_k = 0) = 1 / (1 - u phi'(f(u))).
inline ExceedanceTable exceedance_left_continuous(double beta, double gamma, std::size_t N) {
  require(beta > 0.0 && beta < 1.0 && gamma > 0.0 && gamma < 1.0,
          "left-continuous family needs beta, gamma in (0,1)");
  require(N >= 1, "exceedance horizon must be >= 1");
  const double a = 1.0 + beta;
  const double kappa = gamma / (1.0 + beta);
  const std::size_t L = N + 1;
  std::vector<double> g(L, 0.0), h(L, 0.0);
  g[0] = 1.0;
  h[0] = 1.0;
  double f_prev = 0.0;
  for (std::size_t n = 1; n < L; ++n) {
    const double f = f_prev + kappa * h[n - 1];
    g[n] = -f;
    f_prev = f;
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += ((a + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * g[k] * h[n - k];
    h[n] = acc / static_cast<double>(n);
  }
  const auto lg = series::log1(g);
  // phi'(f) = 1 - kappa a g^{a-1} = 1 - kappa a h / g
  const auto r = series::divide(h, g);
  std::vector<double> den(L, 0.0);
  den[0] = 1.0;
  for (std::size_t n = 1; n < L; ++n)
    den[n] = -((n == 1 ? 1.0 : 0.0) - kappa * a * r[n - 1]);
  std::vector<double> one(L, 0.0);
  one[0] = 1.0;
  const auto zero_mass = series::divide(one, den);

  ExceedanceTable out;
  out.q.assign(L, 0.0);
  out.q_strict.assign(L, 0.0);
  out.q[0] = 1.0;
  for (std::size_t n = 1; n < L; ++n) {
    const double neg = -static_cast<double>(n) * lg[n];
    out.q[n] = std::clamp(1.0 - neg, 0.0, 1.0);
    out.q_strict[n] = std::clamp(1.0 - neg - zero_mass[n], 0.0, 1.0);
  }
  return out;
}

/// Exceedance table of -S from that of S.
inline ExceedanceTable mirror(const ExceedanceTable& e) {
  ExceedanceTable out;
  out.q.resize(e.q.size());
  out.q_strict.resize(e.q.size());
  out.q[0] = 1.0;
  out.q_strict[0] = 0.0;
  for (std::size_t k = 1; k < e.q.size(); ++k) {
    out.q[k] = 1.0 - e.q_strict[k];
    out.q_strict[k] = 1.0 - e.q[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series exponentiation

/// Coefficients a_n of exp(sum_{k>=1} q_k y^k / k), from n a_n = sum_k q_k a_{n-k}.
/// q[0] is ignored. With q = P(S_k >= 0), a_n = P(L_{n,n} = n).
inline std::vector<double> spitzer_exp(const std::vector<double>& q, std::size_t N) {
  require(q.size() >= N + 1, "q shorter than horizon");
  std::vector<double> a(N + 1, 0.0);
  a[0] = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += q[k] * a[n - k];
    a[n] = acc / static_cast<double>(n);
  }
  return a;
}

/// Coefficients d_n of exp(-sum q_k y^k / k).
inline std::vector<double> spitzer_exp_neg(const std::vector<double>& q, std::size_t N) {
  require(q.size() >= N + 1, "q shorter than horizon");
  std::vector<double> d(N + 1, 0.0);
  d[0] = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += q[k] * d[n - k];
    d[n] = -acc / static_cast<double>(n);
  }
  return d;
}

/// t_n = P(T_1 = n) from E y^{T_1} = 1 - exp(-sum q_k y^k / k); t[0] = 0.
inline std::vector<double> ladder_epoch_pmf(const std::vector<double>& q, std::size_t N) {
  auto t = spitzer_exp_neg(q, N);
  t[0] = 0.0;
  for (std::size_t n = 1; n <= N; ++n)
    t[n] = std::max(0.0, -t[n]);
  return t;
}

/// min over theta >= 0 of E exp(theta X). Below one iff the mean is negative,
/// and then P(S_k >= 0) <= psi^k for every k.
inline double chernoff_psi(const LatticeStepLaw& law) {
  const auto p = law.pmf();
  const std::int64_t lo = law.lo(), hi = law.hi();
  if (hi < 0)
    return 0.0;
  if (hi == 0)
    return law.pmf(0);
  if (law.mean() >= 0.0)
    return 1.0;
  // log m(theta) = theta hi + log sum p_k e^{theta (k - hi)}
  auto log_m = [&](double th) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0)
        s += p[i] * std::exp(th * static_cast<double>(lo + static_cast<std::int64_t>(i) - hi));
    return th * static_cast<double>(hi) + std::log(s);
  };
  auto slope = [&](double th) {
    double s = 0.0, s1 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0)
        continue;
      const auto k = static_cast<double>(lo + static_cast<std::int64_t>(i));
      const double w = p[i] * std::exp(th * (k - static_cast<double>(hi)));
      s += w;
      s1 += w * k;
    }
    return s1 / s;
  };
  double a = 0.0, b = 1.0;
  while (slope(b) < 0.0 && b < 1e6)
    b *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    (slope(mid) < 0.0 ? a : b) = mid;
  }
  // Any theta gives a valid bound; take the smaller of the two ends.
  return std::min(1.0, std::exp(std::min(log_m(a), log_m(b))));
}

// ---------------------------------------------------------------------------
// The full table

struct SpitzerSeries {
  std::size_t N = 0;
  DriftClass drift = DriftClass::oscillates;
  std::vector<double> q, q_strict;   // index 0..N
  std::vector<double> a, a_strict;   // P(L_{n,n} = n), P(L_{n,0} = n)
  std::vector<double> d;             // coefficients of exp(-sum q_k y^k/k)
  std::vector<double> t, t_strict;   // P(T_1 = n), strict ladder epoch
  double log_sum = 0;                // sum_{k<=N} q_k / k
  double log_sum_strict = 0;         // sum_{k<=N} q_strict_k / k
  double psi = 1;                    // Chernoff base, q_k <= psi^k
  double tail_bound = std::numeric_limits<double>::infinity(); // >= sum_{k>N} q_k/k
  Interval defect;                   // P(T_1 = infinity)
  Interval defect_strict;            // P(strict ladder epoch = infinity)
};

namespace detail {

inline double kahan_sum_over_k(const std::vector<double>& q, std::size_t N) {
  // Sum small terms first.
  long double s = 0;
  for (std::size_t k = N; k >= 1; --k)
    s += static_cast<long double>(q[k]) / static_cast<long double>(k);
  return static_cast<double>(s);
}

} // namespace detail

/// Assembles all series from given exceedance arrays. psi is a Chernoff base
/// certifying q_k <= psi^k beyond the horizon (1 if unavailable).
inline SpitzerSeries spitzer_series_from(ExceedanceTable e, std::size_t N, DriftClass drift,
                                         double psi = 1.0) {
  require(e.q.size() >= N + 1 && e.q_strict.size() >= N + 1, "exceedance table too short");
  SpitzerSeries s;
  s.N = N;
  s.drift = drift;
  e.q.resize(N + 1);
  e.q_strict.resize(N + 1);
  s.q = std::move(e.q);
  s.q_strict = std::move(e.q_strict);
  s.a = spitzer_exp(s.q, N);
  s.a_strict = spitzer_exp(s.q_strict, N);
  s.d = spitzer_exp_neg(s.q, N);
  s.t = ladder_epoch_pmf(s.q, N);
  s.t_strict = ladder_epoch_pmf(s.q_strict, N);
  s.log_sum = detail::kahan_sum_over_k(s.q, N);
  s.log_sum_strict = detail::kahan_sum_over_k(s.q_strict, N);
  s.psi = psi;
  if (drift == DriftClass::drifts_down && psi < 1.0) {
    const double n1 = static_cast<double>(N + 1);
    s.tail_bound = std::pow(psi, n1) / (n1 * (1.0 - psi));
    // A few ulps of slack for the summation itself.
    const double slack = 1e-15 * (1.0 + s.log_sum);
    s.defect = {std::exp(-s.log_sum - s.tail_bound - slack),
                std::min(1.0, std::exp(-s.log_sum + slack))};
    const double slack_s = 1e-15 * (1.0 + s.log_sum_strict);
    s.defect_strict = {std::exp(-s.log_sum_strict - s.tail_bound - slack_s),
                       std::min(1.0, std::exp(-s.log_sum_strict + slack_s))};
  } else if (drift == DriftClass::drifts_down) {
    // No certificate: report the truncated value as an upper end only.
    s.defect = {0.0, std::exp(-s.log_sum)};
    s.defect_strict = {0.0, std::exp(-s.log_sum_strict)};
  } else {
    // sum q_k / k diverges: ladder epochs are proper.
    s.defect = {0.0, 0.0};
    // Strict epochs are proper too unless the walk is trapped at or below 0,
    // which a nondegenerate walk with mean >= 0 is not.
    s.defect_strict = {0.0, 0.0};
  }
  return s;
}

inline SpitzerSeries spitzer_series(const LatticeStepLaw& law, std::size_t N,
                                    double cell_cap = kDefaultCellCap) {
  require(!law.degenerate() || law.lo() < 0,
          "degenerate law: only a negative constant step is supported");
  const auto drift = classify(law);
  const double psi = drift == DriftClass::drifts_down ? chernoff_psi(law) : 1.0;
  return spitzer_series_from(exceedance_probs(law, N, cell_cap), N, drift, psi);
}

/// q_k = 1/2 for every k (continuous symmetric steps).
inline SpitzerSeries spitzer_series_symmetric_continuous(std::size_t N) {
  ExceedanceTable e;
  e.q.assign(N + 1, 0.5);
  e.q_strict.assign(N + 1, 0.5);
  e.q[0] = 1.0;
  e.q_strict[0] = 0.0;
  return spitzer_series_from(std::move(e), N, DriftClass::oscillates);
}

// ---------------------------------------------------------------------------
// Record counts

/// P(R_n = m) for m = 0..n+1 (entry 0 is zero), by conditioning on the epoch
/// of the (m-1)-th record after S_0:
///   P(R_n = m) = sum_x P(W_{m-1} = x) P(T_1 > n - x),
/// with W_j the j-fold convolution of t. The defect is implicit in P(T_1 > s).
inline std::vector<double> record_count_distribution(const std::vector<double>& t, std::size_t n) {
  require(t.size() >= n + 1, "ladder-epoch pmf shorter than n");
  std::vector<double> surv(n + 1, 1.0);
  for (std::size_t s = 1; s <= n; ++s)
    surv[s] = surv[s - 1] - t[s];
  for (double& v : surv)
    v = std::max(v, 0.0);

  std::vector<double> pmf(n + 2, 0.0), w(n + 1, 0.0), nw(n + 1);
  w[0] = 1.0;
  for (std::size_t m = 1; m <= n + 1; ++m) {
    // W_{m-1} >= m-1, so only x >= m-1 carries mass.
    double acc = 0.0;
    for (std::size_t x = m - 1; x <= n; ++x)
      acc += w[x] * surv[n - x];
    pmf[m] = acc;
    if (m == n + 1)
      break;
    std::fill(nw.begin(), nw.end(), 0.0);
    for (std::size_t x = m - 1; x <= n; ++x) {
      if (w[x] == 0.0)
        continue;
      for (std::size_t i = 1; x + i <= n; ++i)
        nw[x + i] += w[x] * t[i];
    }
    w.swap(nw);
  }
  return pmf;
}

/// log P(W_j <= n), W_j a sum of j i.i.d. copies of a (possibly defective)
/// ladder epoch with pmf t on {1, 2, ...}.
///
/// Works at any depth into the tail: t is exponentially tilted so that the
/// j-fold sum has mean near n, then convolved by binary powering with a running
/// log-scale.
inline double log_renewal_tail(const std::vector<double>& t, std::size_t j, std::size_t n) {
  require(t.size() >= n + 1, "ladder-epoch pmf shorter than n");
  if (j == 0)
    return 0.0;
  if (j > n)
    return -std::numeric_limits<double>::infinity();

  std::vector<double> lt(n + 1, -std::numeric_limits<double>::infinity());
  for (std::size_t x = 1; x <= n; ++x)
    if (t[x] > 0)
      lt[x] = std::log(t[x]);

  // log m(lambda) and tilted mean over x <= n.
  auto tilt = [&](double lambda, double& log_m, double& mean) {
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 1; x <= n; ++x)
      mx = std::max(mx, lt[x] + lambda * static_cast<double>(x));
    double s = 0.0, s1 = 0.0;
    for (std::size_t x = 1; x <= n; ++x) {
      const double w = std::exp(lt[x] + lambda * static_cast<double>(x) - mx);
      s += w;
      s1 += w * static_cast<double>(x);
    }
    log_m = mx + std::log(s);
    mean = s1 / s;
  };

  const double target = static_cast<double>(n) / static_cast<double>(j);
  double log_m = 0, mean = 0;
  double lambda = 0.0;
  tilt(0.0, log_m, mean);
  if (!std::isfinite(log_m))
    return -std::numeric_limits<double>::infinity();
  if (mean > target) {
    double a = -1.0, b = 0.0;
    for (tilt(a, log_m, mean); mean > target && a > -1e4; tilt(a, log_m, mean))
      a *= 2.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (a + b);
      tilt(mid, log_m, mean);
      (mean > target ? b : a) = mid;
    }
    lambda = a;
    tilt(lambda, log_m, mean);
  }

  // Tilted, normalised pmf.
  std::vector<double> base(n + 1, 0.0);
  for (std::size_t x = 1; x <= n; ++x)
    base[x] = std::exp(lt[x] + lambda * static_cast<double>(x) - log_m);

  auto convolve = [n](const std::vector<double>& u, const std::vector<double>& v, double& scale) {
    std::vector<double> r(n + 1, 0.0);
    for (std::size_t x = 0; x <= n; ++x) {
      if (u[x] == 0.0)
        continue;
      for (std::size_t y = 0; x + y <= n; ++y)
        r[x + y] += u[x] * v[y];
    }
    double mx = *std::max_element(r.begin(), r.end());
    if (mx > 0) {
      for (double& e : r)
        e /= mx;
      scale += std::log(mx);
    }
    return r;
  };

  std::vector<double> acc(n + 1, 0.0);
  acc[0] = 1.0;
  double acc_scale = 0.0;
  std::vector<double> pw = base;
  double pw_scale = 0.0;
  for (std::size_t e = j;;) {
    if (e & 1u) {
      double s = acc_scale + pw_scale;
      acc = convolve(acc, pw, s);
      acc_scale = s;
    }
    e >>= 1u;
    if (!e)
      break;
    double s = 2.0 * pw_scale;
    pw = convolve(pw, pw, s);
    pw_scale = s;
  }
  // P = m^j e^{scale} sum_x e^{-lambda x} acc[x]; factor e^{-lambda n}.
  double tail = 0.0;
  for (std::size_t x = 0; x <= n; ++x)
    tail += std::exp(lambda * static_cast<double>(n - x)) * acc[x];
  if (tail <= 0.0)
    return -std::numeric_limits<double>::infinity();
  return static_cast<double>(j) * log_m + acc_scale - lambda * static_cast<double>(n) +
         std::log(tail);
}

/// log P(R_n >= m) = log P(W_{m-1} <= n).
inline double log_record_tail(const std::vector<double>& t, std::size_t n, std::size_t m) {
  if (m <= 1)
    return 0.0;
  return log_renewal_tail(t, m - 1, n);
}

// ---------------------------------------------------------------------------
// Slowly varying factor

struct CRhoResult {
  double value = 1;
  double log_value = 0;
  double remainder_bound = 0; // bound on |log C - truncated log C|
  bool decay_warning = false; // q_k - rho shows no decay near the horizon
};

/// C_rho(1 - 1/x) = exp(sum_k (1 - 1/x)^k (q_k - rho) / k), x >= 1.
inline CRhoResult c_rho(const std::vector<double>& q, double rho, double x) {
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  require(x >= 1.0, "C_rho argument 1 - 1/x needs x >= 1");
  require(q.size() >= 2, "need at least one exceedance probability");
  const std::size_t N = q.size() - 1;
  const double y = 1.0 - 1.0 / x;
  long double s = 0;
  double yk = 1.0;
  for (std::size_t k = 1; k <= N; ++k) {
    yk *= y;
    s += static_cast<long double>(yk) * (q[k] - rho) / static_cast<double>(k);
  }
  CRhoResult r;
  r.log_value = static_cast<double>(s);
  r.value = std::exp(r.log_value);

  double late = 0.0, earlier = 0.0;
  for (std::size_t k = N / 2 + 1; k <= N; ++k)
    late = std::max(late, std::abs(q[k] - rho));
  for (std::size_t k = N / 4 + 1; k <= N / 2; ++k)
    earlier = std::max(earlier, std::abs(q[k] - rho));
  r.decay_warning = late > 1e-3 && late > 0.9 * earlier;
  if (y > 0.0) {
    const double n1 = static_cast<double>(N + 1);
    r.remainder_bound = late * std::pow(y, n1) / (n1 * (1.0 - y));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Transient walks

struct GeometricLaw {
  Interval parameter; // success probability
  Interval mean;
  /// P(X = m) for X on {offset, offset+1, ...} with the mid parameter.
  double pmf(std::uint64_t m, std::uint64_t offset) const {
    if (m < offset)
      return 0.0;
    const double p = parameter.mid();
    return p * std::pow(1.0 - p, static_cast<double>(m - offset));
  }
};

/// R_infinity ~ Geometric on {1,2,...} with parameter P(T_1 = infinity).
inline GeometricLaw r_infinity_law(const SpitzerSeries& s) {
  require(s.drift == DriftClass::drifts_down,
          std::string("R_infinity is finite only for walks drifting to -infinity (walk ") +
              to_string(s.drift) + ")");
  require(s.defect.lo > 0.0, "defect could not be certified positive");
  return {s.defect, {1.0 / s.defect.hi, 1.0 / s.defect.lo}};
}

/// For right-continuous walks every strict ladder height is 1, so M_infinity
/// is the number of strict ladder epochs: Geometric on {0,1,...} with
/// parameter exp(-sum P(S_k > 0)/k). Its mean is exp(sum P(S_k > 0)/k) - 1.
inline GeometricLaw m_infinity_law(const SpitzerSeries& s, const LatticeStepLaw& law) {
  require(law.hi() <= 1, "M_infinity law needs a right-continuous walk (support_hi <= 1)");
  require(s.drift == DriftClass::drifts_down,
          std::string("M_infinity is finite only for walks drifting to -infinity (walk ") +
              to_string(s.drift) + ")");
  const auto& p = s.defect_strict;
  require(p.lo > 0.0, "strict defect could not be certified positive");
  return {p, {1.0 / p.hi - 1.0, 1.0 / p.lo - 1.0}};
}

/// Upper bound on P(some record after step cap) = 1 - delta sum_{k<=cap} a_k.
inline double record_after_cap_bound(const SpitzerSeries& s, std::size_t cap) {
  require(cap <= s.N, "cap beyond the series horizon");
  long double sum = 0;
  for (std::size_t k = 0; k <= cap; ++k)
    sum += s.a[k];
  return std::max(0.0, static_cast<double>(1.0L - static_cast<long double>(s.defect.lo) * sum));
}

/// Smallest cap with record_after_cap_bound < tol, or 0 if none within N.
inline std::size_t certified_record_cap(const SpitzerSeries& s, double tol) {
  long double sum = 0;
  for (std::size_t k = 0; k <= s.N; ++k) {
    sum += s.a[k];
    if (1.0L - static_cast<long double>(s.defect.lo) * sum < tol)
      return k;
  }
  return 0;
}

} // namespace recwalk
