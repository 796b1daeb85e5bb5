#pragma once

// Law of the first weak ladder height Z_1 = S_{T_1} (T_1 = first n >= 1 with
// S_n >= 0) and the renewal function V(x) = sum_n P(H_n <= x).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "recwalk/errors.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/step_laws.hpp"

namespace recwalk {

struct LadderHeightLaw {
  std::vector<double> z_pmf; // P(Z_1 = j, T_1 < infinity), j = 0..maxH
  double z_defect = 0;       // P(T_1 = infinity)
  double continuation = 0;   // mass not yet absorbed at the DP horizon (0 when exact)
  std::size_t horizon = 0;   // DP horizon, 0 for the factorisation route
  bool warning = false;      // continuation above 1e-6

  double total() const {
    double s = z_defect + continuation;
    for (double z : z_pmf)
      s += z;
    return s;
  }
};

/// Absorption DP: mass of paths kept strictly negative, absorbed at the first
/// nonnegative value. Accumulates P(Z_1 = j, T_1 = n) for n <= N.
inline LadderHeightLaw ladder_height_pmf(const LatticeStepLaw& law, std::size_t N, std::size_t maxH) {
  require(N >= 1, "ladder DP needs N >= 1");
  require(static_cast<std::int64_t>(maxH) >= law.hi(), "maxH must be >= support_hi");
  const auto p = law.pmf();
  const std::int64_t lo = law.lo(), hi = law.hi();
  const std::int64_t up = std::max<std::int64_t>(hi, 0);
  const auto n_total = static_cast<std::int64_t>(N);

  LadderHeightLaw out;
  out.z_pmf.assign(maxH + 1, 0.0);
  out.horizon = N;
  double lost = 0.0;

  // Live negative window after n steps: [max(n lo, -(N-n) up), -1].
  std::int64_t cl = 0, ch = 0;
  std::vector<double> cur{1.0}, next;
  for (std::int64_t n = 0; n < n_total; ++n) {
    const std::int64_t nl = std::max((n + 1) * std::min<std::int64_t>(lo, 0), -(n_total - n - 1) * up);
    const std::int64_t nh = -1;
    const bool live = nl <= nh;
    next.assign(live ? static_cast<std::size_t>(nh - nl + 1) : 0, 0.0);
    for (std::int64_t x = cl; x <= ch; ++x) {
      const double m = cur[static_cast<std::size_t>(x - cl)];
      if (m == 0.0)
        continue;
      for (std::size_t j = 0; j < p.size(); ++j) {
        const std::int64_t y = x + lo + static_cast<std::int64_t>(j);
        const double w = m * p[j];
        if (y >= 0)
          out.z_pmf[static_cast<std::size_t>(y)] += w;
        else if (live && y >= nl)
          next[static_cast<std::size_t>(y - nl)] += w;
        else
          lost += w;
      }
    }
    cur.swap(next);
    if (!live) {
      cl = 0;
      ch = -1;
    } else {
      cl = nl;
      ch = nh;
    }
  }
  double remaining = lost;
  for (double m : cur)
    remaining += m;
  out.continuation = remaining;
  out.warning = remaining > 1e-6;
  return out;
}

namespace detail {

/// Divides c (ascending coefficients) by (s - 1).
inline std::vector<double> deflate_unit_root(const std::vector<double>& c) {
  const std::size_t deg = c.size() - 1;
  std::vector<double> b(deg, 0.0);
  b[deg - 1] = c[deg];
  for (std::size_t i = deg - 1; i >= 1; --i)
    b[i - 1] = c[i] + b[i];
  return b;
}

/// Quotient of c by the monic polynomial d (both ascending).
inline std::vector<double> divide_monic(const std::vector<double>& c, const std::vector<double>& d) {
  const std::size_t dc = c.size() - 1, dd = d.size() - 1;
  std::vector<double> rem = c, quo(dc - dd + 1, 0.0);
  for (std::size_t i = dc - dd + 1; i-- > 0;) {
    const double coef = rem[i + dd];
    quo[i] = coef;
    for (std::size_t k = 0; k <= dd; ++k)
      rem[i + k] -= coef * d[k];
  }
  return quo;
}

} // namespace detail

/// Exact ladder-height law by Wiener-Hopf factorisation of the characteristic
/// polynomial Q(s) = s^l (1 - E s^X), l = -support_lo:
///   Q(s) = A(s) D(s),  A(s) = 1 - E[s^{Z_1}; T_1 < infinity],
/// D monic of degree l carrying the roots inside the unit disc (the strict
/// descending factor). The root s = 1 goes to D when the walk drifts down, to A
/// when it drifts up, one to each when it oscillates. Defect = A(1).
inline LadderHeightLaw ladder_height_exact(const LatticeStepLaw& law, std::size_t max_degree = 400) {
  const std::int64_t lo = law.lo(), hi = law.hi();
  LadderHeightLaw out;
  const auto p = law.pmf();
  if (lo >= 0) {
    out.z_pmf.assign(static_cast<std::size_t>(hi) + 1, 0.0);
    for (std::int64_t k = lo; k <= hi; ++k)
      out.z_pmf[static_cast<std::size_t>(k)] = law.pmf(k);
    return out;
  }
  if (hi <= 0) {
    out.z_pmf.assign(1, law.pmf(0));
    out.z_defect = 1.0 - law.pmf(0);
    return out;
  }

  // Work on the sublattice generated by the support.
  std::int64_t g = 0;
  for (std::int64_t k = lo; k <= hi; ++k)
    if (law.pmf(k) > 0 && k != 0)
      g = std::gcd(g, k < 0 ? -k : k);
  const std::int64_t l = -lo / g, r = hi / g;
  require(static_cast<std::size_t>(l + r) <= max_degree,
          "support too wide for the factorisation route");

  std::vector<double> c(static_cast<std::size_t>(l + r) + 1, 0.0);
  c[static_cast<std::size_t>(l)] += 1.0;
  for (std::int64_t k = lo; k <= hi; ++k)
    if (law.pmf(k) > 0)
      c[static_cast<std::size_t>(k / g + l)] -= law.pmf(k);

  const auto drift = classify(law);
  const int unit = drift == DriftClass::oscillates ? 2 : 1;
  std::vector<double> red = c;
  for (int i = 0; i < unit; ++i)
    red = detail::deflate_unit_root(red);

  std::vector<std::complex<double>> inside;
  if (red.size() >= 2) {
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(red.size()));
    for (std::size_t i = 0; i < red.size(); ++i)
      coeffs[static_cast<Eigen::Index>(i)] = red[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    for (const auto& z : solver.roots())
      if (std::abs(z) < 1.0)
        inside.push_back(z);
  }
  const int ones_in_d = drift == DriftClass::drifts_up ? 0 : 1;
  if (static_cast<std::int64_t>(inside.size()) + ones_in_d != l)
    throw numeric_error("Wiener-Hopf root split failed: found " + std::to_string(inside.size()) +
                        " roots inside the unit disc, expected " +
                        std::to_string(l - ones_in_d));

  std::vector<std::complex<double>> dc{1.0};
  auto mul_root = [&](std::complex<double> z) {
    std::vector<std::complex<double>> next(dc.size() + 1, 0.0);
    for (std::size_t i = 0; i < dc.size(); ++i) {
      next[i + 1] += dc[i];
      next[i] -= z * dc[i];
    }
    dc.swap(next);
  };
  for (const auto& z : inside)
    mul_root(z);
  if (ones_in_d)
    mul_root(1.0);
  std::vector<double> d(dc.size());
  for (std::size_t i = 0; i < dc.size(); ++i)
    d[i] = dc[i].real();

  const auto A = detail::divide_monic(c, d);
  out.z_pmf.assign(static_cast<std::size_t>(hi) + 1, 0.0);
  double defect = 0.0;
  for (std::size_t j = 0; j < A.size(); ++j) {
    defect += A[j];
    const double z = j == 0 ? 1.0 - A[0] : -A[j];
    out.z_pmf[j * static_cast<std::size_t>(g)] = std::max(z, 0.0);
  }
  out.z_defect = drift == DriftClass::drifts_down ? std::max(defect, 0.0) : 0.0;
  return out;
}

/// V(x) = sum_{n>=0} P(H_n <= x) for the (possibly defective) ladder-height law.
/// Solved through the renewal equation u = delta_0 + z * u on the lattice,
/// V(x) = sum_{k <= floor(x)} u(k); V(x) = 0 for x < 0.
inline double renewal_function(const LadderHeightLaw& z, double x) {
  require(!z.z_pmf.empty(), "empty ladder-height law");
  const double z0 = z.z_pmf[0];
  if (!(z0 < 1.0))
    throw numeric_error("renewal function diverges: P(Z_1 = 0) = 1");
  if (x < 0.0)
    return 0.0;
  const auto top = static_cast<std::size_t>(std::floor(x));
  std::vector<double> u(top + 1, 0.0);
  long double v = 0;
  for (std::size_t k = 0; k <= top; ++k) {
    double acc = k == 0 ? 1.0 : 0.0;
    for (std::size_t j = 1; j <= k && j < z.z_pmf.size(); ++j)
      acc += z.z_pmf[j] * u[k - j];
    u[k] = acc / (1.0 - z0);
    v += u[k];
  }
  return static_cast<double>(v);
}

} // namespace recwalk
