#pragma once

// Acceptance criteria 1-13, plus supplementary rows that rerun a criterion
// under corrected constants. Each row carries its metrics as JSON; stochastic
// rows also carry a hash of the raw samples so that reruns can be compared
// byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "recwalk/brute_force.hpp"
#include "recwalk/ctrw.hpp"
#include "recwalk/deviations.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/ladder.hpp"
#include "recwalk/mittag_leffler.hpp"
#include "recwalk/transient.hpp"
#include "recwalk/walk.hpp"

namespace recwalk {

struct CriterionResult {
  std::string id;    // "1".."13", supplementary rows "5a", "8a", ...
  std::string title;
  bool pass = false;
  bool supplementary = false;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["title"] = title;
    j["pass"] = pass;
    j["supplementary"] = supplementary;
    j["metrics"] = metrics;
    return j;
  }
};

namespace detail {

inline std::string fnv1a(const std::vector<double>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (double x : v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline double rel_gap(double value, double target) { return std::abs(value - target) / std::abs(target); }

/// The four lattice laws of criteria 1-3.
inline std::vector<std::pair<std::string, LatticeStepLaw>> small_lattice_laws() {
  return {{"bernoulli:0.5", make_bernoulli_walk(0.5)},
          {"bernoulli:1/3", make_bernoulli_walk(1.0 / 3)},
          {"left_continuous:0.5,0.5|<=2", truncated(make_left_continuous(0.5, 0.5), 2)},
          {"lattice:-1:0.35,0.25,0.4", LatticeStepLaw::from_pmf(-1, {0.35, 0.25, 0.4})}};
}

inline std::uint64_t criterion_seed(std::uint64_t seed, int id) { return seed * 1000 + static_cast<std::uint64_t>(id); }

} // namespace detail

// ---------------------------------------------------------------------------
// Exact criteria

/// Criteria 1 and 2 share one enumeration per law.
inline std::vector<CriterionResult> criteria_spitzer(std::uint32_t n = 14) {
  CriterionResult c1{"1", "Spitzer identity: a_n = P(L_{n,n} = n), n <= 14"};
  CriterionResult c2{"2", "Sparre Andersen: P(L_{n,n}=n) = P(N_n=n), P(L_{n,0}=n) = P(N_n^+=n), n <= 14"};
  double worst1 = 0, worst2 = 0;
  for (const auto& [name, law] : detail::small_lattice_laws()) {
    const auto bf = brute_force_record_tables(law, n);
    const auto s = spitzer_series(law, n);
    double d1 = 0, d2 = 0;
    for (std::uint32_t d = 0; d <= n; ++d) {
      d1 = std::max(d1, std::abs(s.a[d] - bf.p_last_max_at_end[d]));
      d2 = std::max({d2, std::abs(bf.p_last_max_at_end[d] - bf.p_all_nonneg[d]),
                     std::abs(bf.p_first_max_at_end[d] - bf.p_all_pos[d])});
    }
    c1.metrics["max_abs_diff"][name] = d1;
    c2.metrics["max_abs_diff"][name] = d2;
    worst1 = std::max(worst1, d1);
    worst2 = std::max(worst2, d2);
  }
  c1.metrics["worst"] = worst1;
  c1.metrics["tolerance"] = 1e-10;
  c1.pass = worst1 <= 1e-10;
  c2.metrics["worst"] = worst2;
  c2.metrics["tolerance"] = 1e-12;
  c2.pass = worst2 <= 1e-12;
  return {c1, c2};
}

inline std::vector<CriterionResult> criterion_record_law(std::uint32_t n = 12) {
  CriterionResult c{"3", "Exact R_n law (weak and strong) vs enumeration, n <= 12"};
  double worst = 0;
  for (const auto& [name, law] : detail::small_lattice_laws()) {
    const auto bf = brute_force_record_tables(law, n);
    const auto s = spitzer_series(law, n);
    double diff = 0;
    for (std::uint32_t d = 0; d <= n; ++d) {
      const auto weak = record_count_distribution(s.t, d);
      const auto strong = record_count_distribution(s.t_strict, d);
      for (std::size_t m = 0; m < bf.r_weak_pmf[d].size(); ++m) {
        diff = std::max(diff, std::abs((m < weak.size() ? weak[m] : 0.0) - bf.r_weak_pmf[d][m]));
        diff = std::max(diff, std::abs((m < strong.size() ? strong[m] : 0.0) - bf.r_strong_pmf[d][m]));
      }
    }
    c.metrics["max_abs_diff"][name] = diff;
    worst = std::max(worst, diff);
  }
  c.metrics["worst"] = worst;
  c.metrics["tolerance"] = 1e-10;
  c.pass = worst <= 1e-10;
  return {c};
}

inline std::vector<CriterionResult> criterion_ladder_asymptotic(std::size_t n = 10000) {
  CriterionResult c{"7", "a_n Gamma(1/2) / (n^{-1/2} C_{1/2}(1-1/n)) in [0.95, 1.05] at n = 10^4"};
  const auto s = spitzer_series(make_bernoulli_walk(0.5), n);
  const auto cr = c_rho(s.q, 0.5, static_cast<double>(n));
  const double ratio = s.a[n] * std::sqrt(std::numbers::pi) /
                       (std::pow(static_cast<double>(n), -0.5) * cr.value);
  c.metrics["a_n"] = s.a[n];
  c.metrics["C"] = cr.value;
  c.metrics["ratio"] = ratio;
  c.pass = ratio >= 0.95 && ratio <= 1.05;
  return {c};
}

inline std::vector<CriterionResult> criterion_ldp() {
  CriterionResult c{"9", "LDP: exact tail slopes at y = 1 and y = 0.75 approach the rate"};
  const auto p = make_rate_profile(spitzer_series(make_bernoulli_walk(0.5), 1600), 0.5);
  const std::vector<std::size_t> grid{100, 400, 1600};
  bool ok = true;
  for (double y : {1.0, 0.75}) {
    const double target = ldp_rate(p, y);
    const auto rows = exact_tail_logslope(p, y, grid);
    nlohmann::ordered_json row;
    row["rate"] = target;
    std::vector<double> gaps;
    for (const auto& r : rows) {
      row["slopes"].push_back(r.slope);
      gaps.push_back(std::abs(r.slope - target));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
      monotone = monotone && gaps[i] < gaps[i - 1];
    const double final_gap = gaps.back() / target;
    const double tol = y == 1.0 ? 0.10 : 0.15;
    row["monotone_approach"] = monotone;
    row["final_rel_gap"] = final_gap;
    row["tolerance"] = tol;
    c.metrics[y == 1.0 ? "y=1" : "y=0.75"] = row;
    ok = ok && monotone && final_gap <= tol;
  }
  c.pass = ok;
  return {c};
}

inline std::vector<CriterionResult> criterion_mdp(std::size_t n = 10000) {
  CriterionResult c{"10", "MDP: rate substitutions and the factor-2 exact-tail band at n = 10^4"};
  const bool subs = std::abs(mdp_rate(0.5, 1.0) - 0.25) < 1e-15 && std::abs(mdp_rate(0.0, 1.0) - 1.0) < 1e-15;
  c.metrics["rate(1/2,1)"] = mdp_rate(0.5, 1.0);
  c.metrics["rate(0,1)"] = mdp_rate(0.0, 1.0);
  const auto s = spitzer_series(make_bernoulli_walk(0.5), n);
  const double rho = 0.5;
  bool band = true;
  for (double y : {1.0, 2.0}) {
    const double ratio = mdp_exact_rate(s, rho, n, y) / mdp_rate(rho, y);
    c.metrics["exact_over_rate"].push_back(ratio);
    band = band && ratio >= 0.5 && ratio <= 2.0;
  }
  c.pass = subs && band;
  return {c};
}

// ---------------------------------------------------------------------------
// Monte Carlo criteria

inline std::vector<CriterionResult> criterion_gaussian_weak(std::uint64_t seed, std::uint64_t n = 10000,
                                                           std::uint64_t reps = 100000) {
  CriterionResult c{"4", "R_n / sqrt(n) -> |N(0,2)|: KS <= 0.02, moment ratio within 3% of pi/2"};
  const auto s = monte_carlo(make_gaussian(1.0), n, reps, {}, detail::criterion_seed(seed, 4));
  std::vector<double> x = s.values();
  const double root = std::sqrt(static_cast<double>(n));
  for (auto& v : x)
    v /= root;
  const double ks = ks_distance(x, ml_cdf_half);
  const double mr = s.moment_ratio();
  const double gap = detail::rel_gap(mr, std::numbers::pi / 2);
  c.metrics["ks"] = ks;
  c.metrics["moment_ratio"] = mr;
  c.metrics["moment_ratio_rel_gap"] = gap;
  c.metrics["mean_scaled"] = s.mean() / root;
  c.metrics["samples_fnv1a"] = detail::fnv1a(s.values());
  c.pass = ks <= 0.02 && gap <= 0.03;
  return {c};
}

/// Left-continuous beta = gamma = 1/2 family. The literal law is run against the stated constants (5)
/// and against the constants the exact engine finds for it (5b); the mirrored
/// law is run against the stated constants (5a).
inline std::vector<CriterionResult> criterion_left_continuous(std::uint64_t seed, std::uint64_t n = 100000,
                                                             std::uint64_t reps = 10000) {
  auto row = [&](std::string id, std::string title, const EmpiricalSummary& s, double rho, double cc,
                 bool supplementary) {
    CriterionResult c{std::move(id), std::move(title)};
    c.supplementary = supplementary;
    const double scale = cc * std::pow(static_cast<double>(n), rho);
    const double mean = s.mean() / scale;
    const double target_mean = 1.0 / std::tgamma(1.0 + rho);
    const double mr = s.moment_ratio();
    const double target_mr = ml_moment_ratio(rho);
    c.metrics["rho"] = rho;
    c.metrics["C"] = cc;
    c.metrics["mean_normalised"] = mean;
    c.metrics["target_mean"] = target_mean;
    c.metrics["mean_rel_gap"] = detail::rel_gap(mean, target_mean);
    c.metrics["moment_ratio"] = mr;
    c.metrics["target_moment_ratio"] = target_mr;
    c.metrics["moment_ratio_rel_gap"] = detail::rel_gap(mr, target_mr);
    c.metrics["samples_fnv1a"] = detail::fnv1a(s.values());
    c.pass = detail::rel_gap(mean, target_mean) <= 0.10 && detail::rel_gap(mr, target_mr) <= 0.05;
    return c;
  };
  const auto law = make_left_continuous(0.5, 0.5);
  const auto literal = monte_carlo(law, n, reps, {}, detail::criterion_seed(seed, 5));
  const auto mirror = monte_carlo(mirrored(law), n, reps, {}, detail::criterion_seed(seed, 5) + 500);
  const double stated_c = std::cbrt(3.0);
  return {row("5", "left_continuous(1/2, 1/2): rho = 2/3, C = 3^{1/3}", literal, 2.0 / 3, stated_c, false),
          row("5a", "left_continuous(1/2, 1/2) mirrored (records of -S): rho = 2/3, C = 3^{1/3}", mirror, 2.0 / 3, stated_c, true),
          row("5b", "left_continuous(1/2, 1/2) literal law, exact-engine constants: rho = 1/3, C = 3^{2/3}", literal, 1.0 / 3,
              std::cbrt(9.0), true)};
}

inline std::vector<CriterionResult> criterion_r_infinity(std::uint64_t seed, std::uint64_t reps = 100000) {
  CriterionResult c{"6", "R_infinity geometric for bernoulli(1/3): TV <= 0.01, mean within 2%"};
  const auto law = make_bernoulli_walk(1.0 / 3);
  const auto r = empirical_r_infinity(law, std::nullopt, reps, detail::criterion_seed(seed, 6));
  const auto g = r_infinity_law(spitzer_series(law, 2000));
  const auto hist = r.summary.histogram();
  const double tv =
      total_variation(hist, reps, [&](std::int64_t m) { return g.pmf(static_cast<std::uint64_t>(m), 1); });
  const double gap = detail::rel_gap(r.summary.mean(), g.mean.mid());
  c.metrics["cap"] = r.cap;
  c.metrics["after_cap_bound"] = r.after_cap_bound;
  c.metrics["certified"] = r.certified;
  c.metrics["parameter"] = g.parameter.mid();
  c.metrics["tv"] = tv;
  c.metrics["mean"] = r.summary.mean();
  c.metrics["target_mean"] = g.mean.mid();
  c.metrics["mean_rel_gap"] = gap;
  c.metrics["samples_fnv1a"] = detail::fnv1a(r.summary.values());
  c.pass = r.certified && tv <= 0.01 && gap <= 0.02;
  return {c};
}

/// Criterion 8 uses the stated target 2/sqrt(pi); 8a includes C_{1/2}(1-) = sqrt 2.
inline std::vector<CriterionResult> criterion_sigma(std::uint64_t seed, std::uint64_t n = 10000,
                                                   std::uint64_t reps = 100000) {
  const auto law = make_bernoulli_walk(0.5);
  const double sigma = 1.5;
  const double v = renewal_function(ladder_height_exact(law), sigma);
  WalkOptions opts;
  opts.sigmas = {0.0, sigma};
  opts.keep_ladders = false;
  // -1 marks a path where the sigma = 0 count differs from r_weak.
  auto values = monte_carlo_map(law, n, reps, detail::criterion_seed(seed, 8), opts, [&](const TrajectoryStats& t) {
    return t.sigma_records(0.0) == t.r_weak ? static_cast<double>(t.sigma_records(sigma)) : -1.0;
  });
  std::uint64_t bad = 0;
  for (double x : values)
    bad += x < 0;
  const EmpiricalSummary s("r_sigma:1.5", values);
  const double scaled = v * s.mean() / std::sqrt(static_cast<double>(n));
  auto row = [&](std::string id, std::string title, double target, bool supplementary) {
    CriterionResult c{std::move(id), std::move(title)};
    c.supplementary = supplementary;
    c.metrics["V(1.5)"] = v;
    c.metrics["mean_scaled"] = scaled;
    c.metrics["target"] = target;
    c.metrics["rel_gap"] = detail::rel_gap(scaled, target);
    c.metrics["paths_r_sigma0_ne_r_weak"] = bad;
    c.metrics["samples_fnv1a"] = detail::fnv1a(values);
    c.pass = detail::rel_gap(scaled, target) <= 0.10 && bad == 0;
    return c;
  };
  const double stated = 2.0 / std::sqrt(std::numbers::pi);
  return {row("8", "sigma-records, bernoulli(1/2), sigma = 1.5: E[V R^sigma / sqrt n] vs 2/sqrt(pi)", stated, false),
          row("8a", "sigma-records with C_{1/2}(1-) = sqrt 2: target 2 sqrt(2/pi)", std::sqrt(2.0) * stated, true)};
}

/// Mean over walks of sup_{n_start <= n <= n_end} R_n / normaliser(n).
inline std::vector<CriterionResult> criterion_lil(std::uint64_t seed, std::uint64_t walks = 20,
                                                 std::uint64_t n_end = 10000000, std::uint64_t n_start = 100000) {
  CriterionResult c{"11", "LIL: constant(1/2) = sqrt(pi); window-sup statistic in [0.5 sqrt(pi), 2.5 sqrt(pi)]"};
  const double k = lil_constant(0.5);
  const double root_pi = std::sqrt(std::numbers::pi);
  const auto q = spitzer_series_symmetric_continuous(16).q;
  std::vector<double> sups(walks);
  parallel_for_index(walks, [&](std::uint64_t r) {
    Stream stream(detail::criterion_seed(seed, 11), r, kStepSubstream);
    sups[r] = lil_window_sup(make_gaussian(1.0), q, 0.5, n_start, n_end, stream).sup;
  });
  double mean = 0, lo = sups[0], hi = sups[0];
  for (double s : sups) {
    mean += s / static_cast<double>(walks);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  c.metrics["constant"] = k;
  c.metrics["constant_abs_err"] = std::abs(k - root_pi);
  c.metrics["window"] = {n_start, n_end};
  c.metrics["statistic"] = mean;
  c.metrics["min_walk"] = lo;
  c.metrics["max_walk"] = hi;
  c.metrics["bracket"] = {0.5 * root_pi, 2.5 * root_pi};
  c.metrics["samples_fnv1a"] = detail::fnv1a(sups);
  c.pass = std::abs(k - root_pi) <= 1e-12 && mean >= 0.5 * root_pi && mean <= 2.5 * root_pi;
  return {c};
}

inline std::vector<CriterionResult> criterion_ctrw(std::uint64_t seed, std::uint64_t reps = 10000) {
  CriterionResult c{"12", "CTRW gaussian + pareto(0.6): mean ratio within 15%, moment ratios within 7%"};
  CTRWConfig cfg;
  cfg.step_law = make_gaussian(1.0);
  cfg.waiting_law = make_pareto(0.6, 1.0);
  cfg.horizons = {1e4, 1e5};
  cfg.reps = reps;
  cfg.seed = detail::criterion_seed(seed, 12);
  const auto s = simulate_ctrw(cfg);
  const auto d = scaling_check(s.r_tilde[0], s.r_tilde[1], 1e4, 1e5, 0.6 * 0.5);
  std::vector<double> mismatch(reps, 0.0);
  parallel_for_index(reps, [&](std::uint64_t r) {
    const auto comp = ctrw_by_composition(cfg, r);
    for (std::size_t h = 0; h < comp.size(); ++h)
      if (comp[h] != s.r_tilde[h][r])
        mismatch[r] = 1.0;
  });
  std::uint64_t bad = 0;
  for (double m : mismatch)
    bad += m != 0.0;
  const double g1 = detail::rel_gap(d.moment_ratio_t1, d.target_moment_ratio);
  const double g2 = detail::rel_gap(d.moment_ratio_t2, d.target_moment_ratio);
  const double gm = detail::rel_gap(d.mean_ratio, d.target_mean_ratio);
  c.metrics["mean_ratio"] = d.mean_ratio;
  c.metrics["target_mean_ratio"] = d.target_mean_ratio;
  c.metrics["mean_ratio_rel_gap"] = gm;
  c.metrics["moment_ratio_t1"] = d.moment_ratio_t1;
  c.metrics["moment_ratio_t2"] = d.moment_ratio_t2;
  c.metrics["target_moment_ratio"] = d.target_moment_ratio;
  c.metrics["monotone"] = d.monotone;
  c.metrics["composition_mismatches"] = bad;
  std::vector<double> flat;
  for (const auto& row : s.r_tilde)
    for (auto v : row)
      flat.push_back(static_cast<double>(v));
  c.metrics["samples_fnv1a"] = detail::fnv1a(flat);
  c.pass = gm <= 0.15 && g1 <= 0.07 && g2 <= 0.07 && bad == 0 && d.monotone;
  return {c};
}

// ---------------------------------------------------------------------------
// Suites

using CriterionGroup = std::function<std::vector<CriterionResult>(std::uint64_t seed)>;

struct GroupSpec {
  std::string name;
  bool stochastic;
  CriterionGroup run;
};

inline const std::vector<GroupSpec>& criterion_groups() {
  static const std::vector<GroupSpec> g{
      {"spitzer", false, [](std::uint64_t) { return criteria_spitzer(); }},
      {"record_law", false, [](std::uint64_t) { return criterion_record_law(); }},
      {"weak_gaussian", true, [](std::uint64_t s) { return criterion_gaussian_weak(s); }},
      {"left_continuous", true, [](std::uint64_t s) { return criterion_left_continuous(s); }},
      {"r_infinity", true, [](std::uint64_t s) { return criterion_r_infinity(s); }},
      {"ladder_asymptotic", false, [](std::uint64_t) { return criterion_ladder_asymptotic(); }},
      {"sigma", true, [](std::uint64_t s) { return criterion_sigma(s); }},
      {"ldp", false, [](std::uint64_t) { return criterion_ldp(); }},
      {"mdp", false, [](std::uint64_t) { return criterion_mdp(); }},
      {"lil", true, [](std::uint64_t s) { return criterion_lil(s); }},
      {"ctrw", true, [](std::uint64_t s) { return criterion_ctrw(s); }},
  };
  return g;
}

/// Group names per suite. "determinism" is criterion 13 over the stochastic
/// groups of the suite.
inline std::vector<std::string> suite_groups(const std::string& suite) {
  if (suite == "fast")
    return {"spitzer", "record_law", "ladder_asymptotic", "ldp", "mdp", "r_infinity", "ctrw", "determinism"};
  if (suite == "full") {
    std::vector<std::string> all;
    for (const auto& g : criterion_groups())
      all.push_back(g.name);
    all.push_back("determinism");
    return all;
  }
  for (const auto& g : criterion_groups())
    if (g.name == suite)
      return {suite};
  if (suite == "determinism")
    return {"determinism"};
  std::string list = "fast, full, determinism";
  for (const auto& g : criterion_groups())
    list += ", " + g.name;
  throw config_error("unknown suite '" + suite + "' (expected one of: " + list + ")");
}

struct AcceptanceReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.supplementary && !r.pass)
        return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["pass"] = pass();
    j["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      j["criteria"].push_back(r.to_json());
    return j;
  }
};

/// Criterion 13: reruns each stochastic group with a different worker count
/// and compares the serialised rows with the ones already in the report (or
/// with a first run, for groups the suite did not include).
inline CriterionResult determinism_row(const AcceptanceReport& report, const std::vector<const GroupSpec*>& done,
                                       std::uint64_t seed) {
  std::vector<const GroupSpec*> targets = done;
  if (targets.empty())
    for (const auto& g : criterion_groups())
      if (g.stochastic)
        targets.push_back(&g);
  CriterionResult c{"13", "Determinism: stochastic criteria rerun with the same seed are byte-identical"};
  const unsigned rerun_workers = worker_count() == 1 ? 3 : 1;
  const char* prev = std::getenv("RECWALK_WORKERS");
  const std::string saved = prev ? prev : "";
  bool ok = true;
  for (const auto* g : targets) {
    std::map<std::string, std::string> ref;
    if (std::find(done.begin(), done.end(), g) != done.end()) {
      for (const auto& r : report.rows)
        ref[r.id] = r.to_json().dump();
    } else {
      for (const auto& r : g->run(seed))
        ref[r.id] = r.to_json().dump();
    }
    setenv("RECWALK_WORKERS", std::to_string(rerun_workers).c_str(), 1);
    const auto again = g->run(seed);
    if (prev)
      setenv("RECWALK_WORKERS", saved.c_str(), 1);
    else
      unsetenv("RECWALK_WORKERS");
    for (const auto& r : again) {
      const bool same = ref.count(r.id) && ref[r.id] == r.to_json().dump();
      c.metrics["identical"][r.id] = same;
      ok = ok && same;
    }
  }
  c.metrics["rerun_workers"] = rerun_workers;
  c.pass = ok;
  return c;
}

/// Progress callback: called after each row with the row and the seconds its
/// group took. Timing never enters the report.
using AcceptanceProgress = std::function<void(const CriterionResult&, double)>;

inline AcceptanceReport run_acceptance(const std::string& suite, std::uint64_t seed,
                                       const AcceptanceProgress& progress = {}) {
  AcceptanceReport report{suite, seed, {}};
  std::vector<const GroupSpec*> stochastic_run;
  auto emit = [&](const std::vector<CriterionResult>& rows, double secs) {
    for (const auto& r : rows) {
      report.rows.push_back(r);
      if (progress)
        progress(r, secs);
    }
  };
  for (const auto& name : suite_groups(suite)) {
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "determinism") {
      const auto row = determinism_row(report, stochastic_run, seed);
      emit({row}, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      continue;
    }
    for (const auto& g : criterion_groups())
      if (g.name == name) {
        const auto rows = g.run(seed);
        if (g.stochastic)
          stochastic_run.push_back(&g);
        emit(rows, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
  }
  return report;
}

inline std::string format_row(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "criterion %-3s %s", r.id.c_str(), r.pass ? "PASS" : "FAIL");
  std::string line = buf;
  if (r.supplementary)
    line += " (supplementary)";
  return line + "  " + r.title;
}

} // namespace recwalk
