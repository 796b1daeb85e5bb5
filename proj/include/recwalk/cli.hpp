#pragma once

// Command-line runner. Every subcommand takes its parameters as flags or from
// a JSON file (--config) whose keys mirror the flag names; flags win.
//
// Exit codes: 0 ok, 2 configuration error, 3 precondition violation,
// 4 acceptance failure, 5 numerical failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recwalk/acceptance.hpp"
#include "recwalk/config.hpp"
#include "recwalk/ctrw.hpp"
#include "recwalk/deviations.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/ladder.hpp"
#include "recwalk/parallel.hpp"
#include "recwalk/walk.hpp"

namespace recwalk::cli {

enum ExitCode { kOk = 0, kConfig = 2, kPrecondition = 3, kAcceptance = 4, kNumeric = 5 };

struct Options {
  std::optional<json> law, wait;
  std::vector<std::uint64_t> n;
  std::optional<std::uint64_t> reps, seed, horizon;
  std::vector<double> sigmas, horizons, y;
  std::optional<double> rho, alpha;
  std::string out, format, stat = "r_weak", suite = "full", table = "series";
  bool strong = false;
};

namespace detail {

template <class T>
T json_as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw config_error("config key '" + key + "' has the wrong type");
  }
}

template <class T>
std::vector<T> json_list(const json& v, const std::string& key) {
  if (v.is_array())
    return json_as<std::vector<T>>(v, key);
  return {json_as<T>(v, key)};
}

/// Flag registration that also knows how to fill the value from a config key.
class Binder {
public:
  Binder(CLI::App* app, Options& o) : app_(app), o_(o) {}

  Binder& law(const std::string& help = "step law, e.g. bernoulli:0.5 or gaussian:1") {
    auto* opt = app_->add_option("--law", law_str_, help);
    keys_["law"] = {opt, [this](const json& v) { o_.law = v; }};
    return *this;
  }
  Binder& wait() {
    auto* opt = app_->add_option("--wait", wait_str_, "waiting law, e.g. pareto:0.6,1");
    keys_["wait"] = {opt, [this](const json& v) { o_.wait = v; }};
    return *this;
  }
  Binder& n(const std::string& help) {
    auto* opt = app_->add_option("--n", o_.n, help)->delimiter(',');
    keys_["n"] = {opt, [this](const json& v) { o_.n = json_list<std::uint64_t>(v, "n"); }};
    return *this;
  }
  Binder& u64(const std::string& name, std::optional<std::uint64_t>& field, const std::string& help) {
    auto* opt = app_->add_option("--" + name, tmp_u64_[name], help);
    targets_u64_[name] = &field;
    keys_[name] = {opt, [&field, name](const json& v) { field = json_as<std::uint64_t>(v, name); }};
    return *this;
  }
  Binder& real(const std::string& name, std::optional<double>& field, const std::string& help) {
    auto* opt = app_->add_option("--" + name, tmp_real_[name], help);
    targets_real_[name] = &field;
    keys_[name] = {opt, [&field, name](const json& v) { field = json_as<double>(v, name); }};
    return *this;
  }
  Binder& list(const std::string& name, std::vector<double>& field, const std::string& help) {
    auto* opt = app_->add_option("--" + name, field, help)->delimiter(',');
    keys_[name] = {opt, [&field, name](const json& v) { field = json_list<double>(v, name); }};
    return *this;
  }
  Binder& text(const std::string& name, std::string& field, const std::string& help,
               std::vector<std::string> choices = {}) {
    auto* opt = app_->add_option("--" + name, field, help);
    if (!choices.empty())
      opt->check(CLI::IsMember(choices));
    keys_[name] = {opt, [&field, name, choices](const json& v) {
                     field = json_as<std::string>(v, name);
                     if (!choices.empty() && std::find(choices.begin(), choices.end(), field) == choices.end())
                       throw config_error("config key '" + name + "': '" + field + "' is not an allowed value");
                   }};
    return *this;
  }
  Binder& flag(const std::string& name, bool& field, const std::string& help) {
    auto* opt = app_->add_flag("--" + name, field, help);
    keys_[name] = {opt, [&field, name](const json& v) { field = json_as<bool>(v, name); }};
    return *this;
  }
  Binder& io() {
    text("out", o_.out, "output file (default stdout)");
    text("format", o_.format, "output format (csv, or json for verify)", {"csv", "json"});
    app_->add_option("--config", config_, "JSON file whose keys mirror the flags");
    return *this;
  }

  /// Moves parsed flag values into Options, then fills the rest from --config.
  void finish() {
    if (keys_.count("law") && keys_["law"].opt->count())
      o_.law = json(law_str_);
    if (keys_.count("wait") && keys_["wait"].opt->count())
      o_.wait = json(wait_str_);
    for (auto& [name, target] : targets_u64_)
      if (keys_[name].opt->count())
        *target = tmp_u64_[name];
    for (auto& [name, target] : targets_real_)
      if (keys_[name].opt->count())
        *target = tmp_real_[name];
    if (config_.empty())
      return;
    std::ifstream in(config_);
    if (!in)
      throw config_error("cannot open config file '" + config_ + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw config_error("config file '" + config_ + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object())
      throw config_error("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      const auto it = keys_.find(key);
      if (it == keys_.end()) {
        std::string allowed;
        for (const auto& [k, _] : keys_)
          allowed += (allowed.empty() ? "" : ", ") + k;
        throw config_error("unknown config key '" + key + "' for '" + app_->get_name() + "' (allowed: " + allowed +
                           ")");
      }
      if (it->second.opt->count() == 0)
        it->second.set(value);
    }
  }

private:
  struct Key {
    CLI::Option* opt = nullptr;
    std::function<void(const json&)> set;
  };
  CLI::App* app_;
  Options& o_;
  std::string law_str_, wait_str_, config_;
  std::map<std::string, Key> keys_;
  std::map<std::string, std::uint64_t> tmp_u64_;
  std::map<std::string, double> tmp_real_;
  std::map<std::string, std::optional<std::uint64_t>*> targets_u64_;
  std::map<std::string, std::optional<double>*> targets_real_;
};

inline StepLaw need_law(const Options& o, const std::string& cmd) {
  if (!o.law)
    throw config_error(cmd + " needs --law");
  return parse_step_law(*o.law);
}

inline std::uint64_t need_single_n(const Options& o, const std::string& cmd) {
  if (o.n.size() != 1)
    throw config_error(cmd + " needs exactly one --n");
  return o.n[0];
}

inline std::uint64_t need(const std::optional<std::uint64_t>& v, const std::string& what) {
  if (!v)
    throw config_error(what);
  return *v;
}

inline json law_json(const Options& o) { return o.law->is_string() ? law_string_to_json(*o.law) : *o.law; }

inline StatisticSelector parse_statistic(const std::string& s) {
  static const std::map<std::string, Statistic> names{
      {"r_weak", Statistic::r_weak},           {"r_strong", Statistic::r_strong},
      {"max_val", Statistic::max_val},         {"final_val", Statistic::final_val},
      {"n_nonneg", Statistic::n_nonneg},       {"n_pos", Statistic::n_pos},
      {"last_max_pos", Statistic::last_max_pos}, {"first_max_pos", Statistic::first_max_pos}};
  if (s.rfind("r_sigma:", 0) == 0)
    return {Statistic::r_sigma, recwalk::detail::parse_number(s.substr(8), "r_sigma threshold")};
  const auto it = names.find(s);
  if (it == names.end())
    throw config_error("unknown statistic '" + s + "' (r_weak, r_strong, r_sigma:<s>, max_val, final_val, n_nonneg, "
                       "n_pos, last_max_pos, first_max_pos)");
  return {it->second, 0.0};
}

inline SpitzerSeries series_for(const StepLaw& law, std::size_t N) {
  if (const auto* l = std::get_if<LatticeStepLaw>(&law))
    return spitzer_series(*l, N);
  return spitzer_series_symmetric_continuous(N);
}

inline std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------------------
// Subcommands. Each writes its artifact to `out` and returns an exit code.

inline int cmd_simulate(const Options& o, std::ostream& out) {
  const auto law = need_law(o, "simulate");
  const auto n = need_single_n(o, "simulate");
  const auto reps = need(o.reps, "simulate needs --reps");
  const auto seed = need(o.seed, "simulate needs --seed");
  const auto sel = parse_statistic(o.stat);
  WalkOptions wo;
  wo.sigmas = o.sigmas;
  const auto s = monte_carlo(law, n, reps, sel, seed, wo);
  if (o.format == "json") {
    json j;
    j["command"] = "simulate";
    j["law"] = law_json(o);
    j["n"] = n;
    j["reps"] = reps;
    j["seed"] = seed;
    j["summary"] = s.to_json();
    out << j.dump(2) << '\n';
  } else {
    s.write_csv(out);
  }
  return kOk;
}

inline int cmd_exact(const Options& o, std::ostream& out) {
  const auto law = require_lattice(need_law(o, "exact"), "exact");
  const std::size_t N = o.horizon ? *o.horizon : (o.n.size() == 1 ? o.n[0] : 0);
  if (N == 0)
    throw config_error("exact needs --horizon >= 1");
  const auto s = spitzer_series(law, N);
  json meta;
  meta["law"] = law_json(o);
  meta["horizon"] = N;
  meta["drift"] = to_string(s.drift);
  meta["defect"] = {s.defect.lo, s.defect.hi};
  meta["table"] = o.table;
  std::vector<std::string> cols;
  std::vector<std::vector<double>> data;
  if (o.table == "series") {
    cols = {"q", "q_strict", "a", "t"};
    data = {s.q, s.q_strict, s.a, s.t};
    data[0][0] = 1.0;
    data[3][0] = 0.0;
  } else if (o.table == "q" || o.table == "a" || o.table == "t") {
    cols = {"value"};
    data = {o.table == "q" ? s.q : o.table == "a" ? s.a : s.t};
  } else if (o.table == "pmf") {
    cols = {"value"};
    data = {record_count_distribution(s.t, N)};
  } else {  // v
    const auto z = ladder_height_exact(law);
    std::vector<double> v(N + 1);
    for (std::size_t k = 0; k <= N; ++k)
      v[k] = renewal_function(z, static_cast<double>(k));
    cols = {"value"};
    data = {v};
  }
  if (o.format == "json") {
    json j = meta;
    for (std::size_t c = 0; c < cols.size(); ++c)
      j[cols[c] == "value" ? o.table : cols[c]] = data[c];
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "# " << meta.dump() << '\n' << (o.table == "pmf" ? "m" : o.table == "v" ? "x" : "n");
  for (const auto& c : cols)
    out << ',' << c;
  out << '\n';
  for (std::size_t k = 0; k < data[0].size(); ++k) {
    if (o.table == "pmf" && k == 0)
      continue;
    out << k;
    for (const auto& col : data)
      out << ',' << fmt(col[k]);
    out << '\n';
  }
  return kOk;
}

inline int cmd_dist(const Options& o, std::ostream& out) {
  const auto law = require_lattice(need_law(o, "dist"), "dist");
  const auto n = need_single_n(o, "dist");
  const auto s = spitzer_series(law, std::max<std::uint64_t>(n, 1));
  const auto pmf = record_count_distribution(o.strong ? s.t_strict : s.t, n);
  if (o.format == "json") {
    json j;
    j["command"] = "dist";
    j["law"] = law_json(o);
    j["n"] = n;
    j["records"] = o.strong ? "strong" : "weak";
    json p = json::object();
    for (std::size_t m = 1; m < pmf.size(); ++m)
      p[std::to_string(m)] = pmf[m];
    j["pmf"] = p;
    out << j.dump(2) << '\n';
  } else {
    out << "m,probability\n";
    for (std::size_t m = 1; m < pmf.size(); ++m)
      out << m << ',' << fmt(pmf[m]) << '\n';
  }
  return kOk;
}

inline int cmd_sigma(const Options& o, std::ostream& out) {
  const auto law = need_law(o, "sigma");
  const auto n = need_single_n(o, "sigma");
  const auto reps = need(o.reps, "sigma needs --reps");
  const auto seed = need(o.seed, "sigma needs --seed");
  if (o.sigmas.empty())
    throw config_error("sigma needs --sigmas");
  const double rho = o.rho.value_or(0.5);
  std::optional<LadderHeightLaw> z;
  if (const auto* l = std::get_if<LatticeStepLaw>(&law))
    z = ladder_height_exact(*l);
  WalkOptions wo;
  wo.sigmas = o.sigmas;
  wo.keep_ladders = false;
  std::vector<std::vector<double>> counts(o.sigmas.size(), std::vector<double>(reps));
  parallel_for_index(reps, [&](std::uint64_t r) {
    Stream stream(seed, r, kStepSubstream);
    const auto t = run_walk(law, n, wo, stream);
    for (std::size_t i = 0; i < o.sigmas.size(); ++i)
      counts[i][r] = static_cast<double>(t.sigma_records(o.sigmas[i]));
  });
  json rows = json::array();
  std::ostringstream csv;
  csv << "sigma,V,mean_r_sigma,mean_scaled,moment_ratio\n";
  for (std::size_t i = 0; i < o.sigmas.size(); ++i) {
    const EmpiricalSummary s("r_sigma", counts[i]);
    const double v = z ? renewal_function(*z, o.sigmas[i]) : std::numeric_limits<double>::quiet_NaN();
    const double scaled = v * s.mean() / std::pow(static_cast<double>(n), rho);
    csv << fmt(o.sigmas[i]) << ',' << fmt(v) << ',' << fmt(s.mean()) << ',' << fmt(scaled) << ','
        << fmt(s.moment_ratio()) << '\n';
    rows.push_back({{"sigma", o.sigmas[i]},
                    {"V", z ? json(v) : json(nullptr)},
                    {"mean_r_sigma", s.mean()},
                    {"mean_scaled", z ? json(scaled) : json(nullptr)},
                    {"moment_ratio", s.moment_ratio()}});
  }
  if (o.format == "json") {
    json j;
    j["command"] = "sigma";
    j["law"] = law_json(o);
    j["n"] = n;
    j["reps"] = reps;
    j["seed"] = seed;
    j["rho"] = rho;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return kOk;
}

inline int cmd_ctrw(const Options& o, std::ostream& out) {
  CTRWConfig c;
  c.step_law = o.law ? parse_step_law(*o.law) : make_gaussian(1.0);
  if (o.wait)
    c.waiting_law = parse_waiting_law(*o.wait);
  else if (o.alpha)
    c.waiting_law = recwalk::detail::build("pareto", [&] { return make_pareto(*o.alpha, 1.0); });
  if (o.horizons.empty())
    throw config_error("ctrw needs --horizons");
  c.horizons = o.horizons;
  c.reps = need(o.reps, "ctrw needs --reps");
  c.seed = need(o.seed, "ctrw needs --seed");
  const auto s = simulate_ctrw(c);
  if (o.format == "json") {
    json j;
    j["command"] = "ctrw";
    j["law"] = o.law ? law_json(o) : json(law_string_to_json("gaussian:1"));
    j["reps"] = c.reps;
    j["seed"] = c.seed;
    json per = json::array();
    for (std::size_t h = 0; h < s.horizons.size(); ++h) {
      std::vector<double> v(s.r_tilde[h].begin(), s.r_tilde[h].end());
      const EmpiricalSummary e("r_tilde", v);
      per.push_back({{"t", s.horizons[h]}, {"mean", e.mean()}, {"moment_ratio", e.moment_ratio()}});
    }
    j["horizons"] = per;
    if (o.rho && c.waiting_law.family == WaitingFamily::pareto && s.horizons.size() >= 2 &&
        s.horizons.back() >= 10 * s.horizons.front() && s.horizons.front() > 0) {
      const auto d = scaling_check(s.r_tilde.front(), s.r_tilde.back(), s.horizons.front(), s.horizons.back(),
                                   c.waiting_law.alpha * *o.rho);
      j["scaling"] = {{"mean_ratio", d.mean_ratio},
                      {"target_mean_ratio", d.target_mean_ratio},
                      {"moment_ratio_t1", d.moment_ratio_t1},
                      {"moment_ratio_t2", d.moment_ratio_t2},
                      {"target_moment_ratio", d.target_moment_ratio},
                      {"monotone", d.monotone}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << "replicate,t,r_tilde\n";
    for (std::uint64_t r = 0; r < c.reps; ++r)
      for (std::size_t h = 0; h < s.horizons.size(); ++h)
        out << r << ',' << fmt(s.horizons[h]) << ',' << s.r_tilde[h][r] << '\n';
  }
  return kOk;
}

inline int cmd_ldp(const Options& o, std::ostream& out) {
  const auto law = need_law(o, "ldp");
  if (o.y.empty())
    throw config_error("ldp needs --y");
  std::vector<std::size_t> grid(o.n.begin(), o.n.end());
  std::size_t N = 2;
  for (auto n : grid)
    N = std::max<std::size_t>(N, n);
  if (o.horizon)
    N = std::max<std::size_t>(N, *o.horizon);
  const auto p = make_rate_profile(series_for(law, N),
                                   std::holds_alternative<ContinuousStepLaw>(law) ? std::optional<double>(0.5) : o.rho);
  json rows = json::array();
  std::ostringstream csv;
  csv << "y,rate";
  for (auto n : grid)
    csv << ",exact_slope_" << n;
  csv << '\n';
  for (double y : o.y) {
    const double rate = ldp_rate(p, y);
    csv << fmt(y) << ',' << fmt(rate);
    json row{{"y", y}, {"rate", rate}};
    if (!grid.empty())
      for (const auto& t : exact_tail_logslope(p, y, grid)) {
        csv << ',' << fmt(t.slope);
        row["exact_slope"][std::to_string(t.n)] = t.slope;
      }
    csv << '\n';
    rows.push_back(row);
  }
  if (o.format == "json") {
    json j;
    j["command"] = "ldp";
    j["law"] = law_json(o);
    j["drift"] = to_string(p.drift);
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return kOk;
}

inline int cmd_mdp(const Options& o, std::ostream& out) {
  if (!o.rho)
    throw config_error("mdp needs --rho");
  if (o.y.empty())
    throw config_error("mdp needs --y");
  const double rho = *o.rho;
  std::optional<SpitzerSeries> s;
  std::uint64_t n = 0;
  if (o.law) {
    n = need_single_n(o, "mdp with --law");
    s = series_for(parse_step_law(*o.law), n);
  }
  std::ostringstream csv;
  csv << "y,rate";
  if (s)
    csv << ",exact_" << n;
  csv << '\n';
  json rows = json::array();
  for (double y : o.y) {
    const double rate = mdp_rate(rho, y);
    csv << fmt(y) << ',' << fmt(rate);
    json row{{"y", y}, {"rate", rate}};
    if (s) {
      const double exact = mdp_exact_rate(*s, rho, n, y);
      csv << ',' << fmt(exact);
      row["exact"] = exact;
    }
    csv << '\n';
    rows.push_back(row);
  }
  if (o.format == "json") {
    json j;
    j["command"] = "mdp";
    j["rho"] = rho;
    if (s)
      j["n"] = n;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return kOk;
}

inline int cmd_lil(const Options& o, std::ostream& out) {
  if (!o.rho)
    throw config_error("lil needs --rho");
  if (o.n.empty())
    throw config_error("lil needs --n");
  const auto law = o.law ? parse_step_law(*o.law) : StepLaw(make_gaussian(1.0));
  const std::size_t N = std::holds_alternative<ContinuousStepLaw>(law)
                            ? 16
                            : static_cast<std::size_t>(o.horizon.value_or(20000));
  const auto s = series_for(law, N);
  const double k = lil_constant(*o.rho);
  std::ostringstream csv;
  csv << "n,constant,f_n,normalizer\n";
  json rows = json::array();
  for (auto n : o.n) {
    const double x = static_cast<double>(n);
    const double f = lil_f(s.q, *o.rho, x);
    const double norm = lil_normalizer(s.q, *o.rho, x);
    csv << n << ',' << fmt(k) << ',' << fmt(f) << ',' << fmt(norm) << '\n';
    rows.push_back({{"n", n}, {"f_n", f}, {"normalizer", norm}});
  }
  if (o.format == "json") {
    json j;
    j["command"] = "lil";
    j["rho"] = *o.rho;
    j["constant"] = k;
    j["series_horizon"] = N;
    j["rows"] = rows;
    out << j.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto seed = need(o.seed, "verify needs --seed");
  const auto report = run_acceptance(o.suite, seed, [&](const CriterionResult& r, double secs) {
    char t[32];
    std::snprintf(t, sizeof t, "%.1f", secs);
    err << format_row(r) << "  [" << t << "s]\n";
  });
  if (o.format == "csv") {
    out << "id,pass,supplementary,title\n";
    for (const auto& r : report.rows)
      out << r.id << ',' << (r.pass ? 1 : 0) << ',' << (r.supplementary ? 1 : 0) << ",\"" << r.title << "\"\n";
  } else {
    out << report.to_json().dump(2) << '\n';
  }
  return report.pass() ? kOk : kAcceptance;
}

} // namespace detail

/// Parses argv and runs one subcommand; artifacts go to `out` unless --out is
/// given, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Record statistics of random walks: exact laws, Monte Carlo, rate functions."};
  app.name("recwalk");
  app.require_subcommand(1);
  Options o;
  std::map<std::string, std::unique_ptr<detail::Binder>> binders;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    binders[name] = std::make_unique<detail::Binder>(s, o);
    return binders[name].get();
  };
  sub("simulate", "Monte Carlo record statistics, one row per replicate")
      ->law()
      .n("steps per walk")
      .u64("reps", o.reps, "replicates")
      .u64("seed", o.seed, "seed")
      .list("sigmas", o.sigmas, "sigma thresholds to track")
      .text("stat", o.stat, "statistic: r_weak, r_strong, r_sigma:<s>, max_val, ...")
      .io();
  sub("exact", "exact tables q, a, t, R_n pmf or V for a lattice law")
      ->law()
      .u64("horizon", o.horizon, "series horizon N")
      .n("same as --horizon")
      .text("table", o.table, "table to emit", {"series", "q", "a", "t", "pmf", "v"})
      .io();
  sub("dist", "exact law of R_n")
      ->law()
      .n("number of steps")
      .flag("strong", o.strong, "strong records")
      .io();
  sub("sigma", "sigma-record experiment with V(sigma)")
      ->law()
      .n("steps per walk")
      .u64("reps", o.reps, "replicates")
      .u64("seed", o.seed, "seed")
      .list("sigmas", o.sigmas, "sigma thresholds")
      .real("rho", o.rho, "index for the n^rho scaling (default 0.5)")
      .io();
  sub("ctrw", "continuous-time random walk record counts")
      ->law()
      .wait()
      .real("alpha", o.alpha, "pareto(alpha, 1) waits when --wait is absent")
      .real("rho", o.rho, "rho for the scaling diagnostics (json output)")
      .list("horizons", o.horizons, "times t, ascending")
      .u64("reps", o.reps, "replicates")
      .u64("seed", o.seed, "seed")
      .io();
  sub("ldp", "large-deviation rate with exact tail slopes")
      ->law()
      .list("y", o.y, "fractions y in (0,1]")
      .n("exact-slope grid")
      .u64("horizon", o.horizon, "series horizon (default: largest n)")
      .real("rho", o.rho, "known limit of P(S_k >= 0), closes the series")
      .io();
  sub("mdp", "moderate-deviation rate, optionally with the exact tail")
      ->law("lattice law for the exact column")
      .real("rho", o.rho, "rho")
      .list("y", o.y, "y values")
      .n("n for the exact column")
      .io();
  sub("lil", "LIL constant and normaliser")
      ->law("step law (default gaussian)")
      .real("rho", o.rho, "rho")
      .n("n values")
      .u64("horizon", o.horizon, "series horizon for lattice laws (default 20000)")
      .io();
  sub("verify", "acceptance suite; pass/fail report")
      ->u64("seed", o.seed, "seed")
      .text("suite", o.suite, "full (default), fast, determinism, or one criterion group")
      .io();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfig;
  }
  try {
    auto* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    binders[name]->finish();
    if (o.format.empty())
      o.format = name == "verify" ? "json" : "csv";
    std::ofstream file;
    std::ostream* dest = &out;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file)
        throw config_error("cannot write '" + o.out + "'");
      dest = &file;
    }
    if (name == "simulate")
      return detail::cmd_simulate(o, *dest);
    if (name == "exact")
      return detail::cmd_exact(o, *dest);
    if (name == "dist")
      return detail::cmd_dist(o, *dest);
    if (name == "sigma")
      return detail::cmd_sigma(o, *dest);
    if (name == "ctrw")
      return detail::cmd_ctrw(o, *dest);
    if (name == "ldp")
      return detail::cmd_ldp(o, *dest);
    if (name == "mdp")
      return detail::cmd_mdp(o, *dest);
    if (name == "lil")
      return detail::cmd_lil(o, *dest);
    return detail::cmd_verify(o, *dest, err);
  } catch (const config_error& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const numeric_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumeric;
  }
}

} // namespace recwalk::cli
