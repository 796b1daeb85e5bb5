#pragma once

// Step and waiting laws from JSON objects or compact strings.
//
//   {"kind":"bernoulli","p":0.5}                      bernoulli:0.5
//   {"kind":"left_continuous","beta":0.5,"gamma":0.5} left_continuous:0.5,0.5
//   {"kind":"left_continuous",...,"mirror":true}      mirror_left_continuous:0.5,0.5
//   {"kind":"lattice","lo":-1,"pmf":[0.3,0.2,0.5]}    lattice:-1:0.3,0.2,0.5
//   {"kind":"point","value":-1}                       point:-1
//   {"kind":"gaussian","sigma":1.0}                   gaussian:1
//   {"kind":"uniform","half_width":1.0}               uniform:1
//   {"kind":"cauchy","scale":1.0}                     cauchy:1
//   {"kind":"pareto","alpha":0.6,"scale":1.0}         pareto:0.6,1
//   {"kind":"exponential","mean":1.0}                 exponential:1
//   {"kind":"deterministic","value":1.0}              deterministic:1
//
// Lattice laws also accept "max_hi" (truncate the upper support) and
// "eps" (left_continuous truncation mass).

#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recwalk/errors.hpp"
#include "recwalk/step_laws.hpp"

namespace recwalk {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

inline double parse_number(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw config_error("expected a number for " + what + ", got '" + s + "'");
  return v;
}

inline std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(s, ','))
    out.push_back(parse_number(part, what));
  return out;
}

inline void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& kind) {
  for (const auto& [key, _] : j.items())
    if (key != "kind" && !allowed.count(key)) {
      std::string list;
      for (const auto& a : allowed)
        list += (list.empty() ? "" : ", ") + a;
      throw config_error("unknown key '" + key + "' for law '" + kind + "' (allowed: " + list + ")");
    }
}

inline double number_field(const json& j, const std::string& key, const std::string& kind) {
  if (!j.contains(key))
    throw config_error("law '" + kind + "' needs a numeric '" + key + "'");
  if (!j.at(key).is_number())
    throw config_error("law '" + kind + "': '" + key + "' must be a number");
  return j.at(key).get<double>();
}

inline double number_field_or(const json& j, const std::string& key, const std::string& kind, double fallback) {
  return j.contains(key) ? number_field(j, key, kind) : fallback;
}

/// Factory preconditions become config errors: the values came from the user.
template <class Fn>
auto build(const std::string& kind, Fn&& fn) {
  try {
    return fn();
  } catch (const precondition_error& e) {
    throw config_error("law '" + kind + "': " + e.what());
  }
}

inline void expect_count(const std::vector<double>& v, std::size_t lo, std::size_t hi, const std::string& kind) {
  if (v.size() < lo || v.size() > hi)
    throw config_error("law '" + kind + "' takes " + std::to_string(lo) +
                       (hi > lo ? "-" + std::to_string(hi) : "") + " parameter(s), got " +
                       std::to_string(v.size()));
}

} // namespace detail

inline const std::set<std::string>& step_law_kinds() {
  static const std::set<std::string> k{"bernoulli", "left_continuous", "lattice", "point",
                                       "gaussian",  "uniform",         "cauchy"};
  return k;
}

inline const std::set<std::string>& waiting_law_kinds() {
  static const std::set<std::string> k{"pareto", "exponential", "deterministic"};
  return k;
}

/// Compact "kind:params" form to the JSON object form.
inline json law_string_to_json(const std::string& spec) {
  const auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  json j;
  bool mirror = false;
  if (kind == "mirror_left_continuous") {
    kind = "left_continuous";
    mirror = true;
  }
  j["kind"] = kind;
  auto params = [&] { return rest.empty() ? std::vector<double>{} : detail::parse_numbers(rest, kind); };
  if (kind == "bernoulli") {
    const auto v = params();
    detail::expect_count(v, 1, 1, kind);
    j["p"] = v[0];
  } else if (kind == "left_continuous") {
    const auto v = params();
    detail::expect_count(v, 2, 3, kind);
    j["beta"] = v[0];
    j["gamma"] = v[1];
    if (v.size() == 3)
      j["eps"] = v[2];
    if (mirror)
      j["mirror"] = true;
  } else if (kind == "lattice") {
    const auto colon2 = rest.find(':');
    if (colon2 == std::string::npos)
      throw config_error("lattice law is written lattice:<lo>:<p_lo>,<p_lo+1>,...");
    const double lo = detail::parse_number(rest.substr(0, colon2), "lattice lo");
    j["lo"] = static_cast<std::int64_t>(lo);
    j["pmf"] = detail::parse_numbers(rest.substr(colon2 + 1), "lattice pmf");
  } else if (kind == "point") {
    const auto v = params();
    detail::expect_count(v, 1, 1, kind);
    j["value"] = static_cast<std::int64_t>(v[0]);
  } else if (kind == "gaussian" || kind == "uniform" || kind == "cauchy" || kind == "exponential" ||
             kind == "deterministic") {
    const auto v = params();
    detail::expect_count(v, 0, 1, kind);
    const char* key = kind == "gaussian"      ? "sigma"
                      : kind == "uniform"     ? "half_width"
                      : kind == "cauchy"      ? "scale"
                      : kind == "exponential" ? "mean"
                                              : "value";
    j[key] = v.empty() ? 1.0 : v[0];
  } else if (kind == "pareto") {
    const auto v = params();
    detail::expect_count(v, 1, 2, kind);
    j["alpha"] = v[0];
    j["scale"] = v.size() == 2 ? v[1] : 1.0;
  } else {
    throw config_error("unknown law kind '" + kind + "'");
  }
  return j;
}

inline StepLaw parse_step_law(const json& j) {
  if (j.is_string())
    return parse_step_law(law_string_to_json(j.get<std::string>()));
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw config_error("a step law is an object with a string 'kind'");
  const std::string kind = j["kind"];
  using detail::number_field;
  auto lattice_tail = [&](LatticeStepLaw law) {
    if (j.contains("max_hi"))
      law = detail::build(kind, [&] { return truncated(law, static_cast<std::int64_t>(number_field(j, "max_hi", kind))); });
    return law;
  };
  if (kind == "bernoulli") {
    detail::check_keys(j, {"p", "max_hi"}, kind);
    return lattice_tail(detail::build(kind, [&] { return make_bernoulli_walk(number_field(j, "p", kind)); }));
  }
  if (kind == "left_continuous") {
    detail::check_keys(j, {"beta", "gamma", "eps", "mirror", "max_hi"}, kind);
    auto law = detail::build(kind, [&] {
      return make_left_continuous(number_field(j, "beta", kind), number_field(j, "gamma", kind),
                                  detail::number_field_or(j, "eps", kind, 1e-12));
    });
    law = lattice_tail(law);
    if (j.contains("mirror")) {
      if (!j["mirror"].is_boolean())
        throw config_error("law 'left_continuous': 'mirror' must be true or false");
      if (j["mirror"].get<bool>())
        law = mirrored(law);
    }
    return law;
  }
  if (kind == "lattice") {
    detail::check_keys(j, {"lo", "pmf", "max_hi"}, kind);
    if (!j.contains("lo") || !j["lo"].is_number_integer())
      throw config_error("law 'lattice' needs an integer 'lo'");
    if (!j.contains("pmf") || !j["pmf"].is_array())
      throw config_error("law 'lattice' needs an array 'pmf'");
    std::vector<double> pmf;
    for (const auto& v : j["pmf"]) {
      if (!v.is_number())
        throw config_error("law 'lattice': pmf entries must be numbers");
      pmf.push_back(v.get<double>());
    }
    auto law = detail::build(kind, [&] { return LatticeStepLaw::from_pmf(j["lo"].get<std::int64_t>(), pmf); });
    return lattice_tail(law);
  }
  if (kind == "point") {
    detail::check_keys(j, {"value"}, kind);
    if (!j.contains("value") || !j["value"].is_number_integer())
      throw config_error("law 'point' needs an integer 'value'");
    return LatticeStepLaw::point_mass(j["value"].get<std::int64_t>());
  }
  if (kind == "gaussian") {
    detail::check_keys(j, {"sigma"}, kind);
    return detail::build(kind, [&] { return make_gaussian(detail::number_field_or(j, "sigma", kind, 1.0)); });
  }
  if (kind == "uniform") {
    detail::check_keys(j, {"half_width"}, kind);
    return detail::build(kind,
                         [&] { return make_uniform_symmetric(detail::number_field_or(j, "half_width", kind, 1.0)); });
  }
  if (kind == "cauchy") {
    detail::check_keys(j, {"scale"}, kind);
    return detail::build(kind, [&] { return make_cauchy(detail::number_field_or(j, "scale", kind, 1.0)); });
  }
  std::string list;
  for (const auto& k : step_law_kinds())
    list += (list.empty() ? "" : ", ") + k;
  throw config_error("unknown step law kind '" + kind + "' (expected one of: " + list + ")");
}

inline StepLaw parse_step_law(const std::string& spec) { return parse_step_law(law_string_to_json(spec)); }
inline StepLaw parse_step_law(const char* spec) { return parse_step_law(std::string(spec)); }

inline WaitingLaw parse_waiting_law(const json& j) {
  if (j.is_string())
    return parse_waiting_law(law_string_to_json(j.get<std::string>()));
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw config_error("a waiting law is an object with a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "pareto") {
    detail::check_keys(j, {"alpha", "scale"}, kind);
    return detail::build(kind, [&] {
      return make_pareto(detail::number_field(j, "alpha", kind), detail::number_field_or(j, "scale", kind, 1.0));
    });
  }
  if (kind == "exponential") {
    detail::check_keys(j, {"mean"}, kind);
    return detail::build(kind,
                         [&] { return make_exponential_wait(detail::number_field_or(j, "mean", kind, 1.0)); });
  }
  if (kind == "deterministic") {
    detail::check_keys(j, {"value"}, kind);
    return detail::build(kind,
                         [&] { return make_deterministic_wait(detail::number_field_or(j, "value", kind, 1.0)); });
  }
  std::string list;
  for (const auto& k : waiting_law_kinds())
    list += (list.empty() ? "" : ", ") + k;
  throw config_error("unknown waiting law kind '" + kind + "' (expected one of: " + list + ")");
}

inline WaitingLaw parse_waiting_law(const std::string& spec) { return parse_waiting_law(law_string_to_json(spec)); }
inline WaitingLaw parse_waiting_law(const char* spec) { return parse_waiting_law(std::string(spec)); }

inline const LatticeStepLaw& require_lattice(const StepLaw& law, const std::string& what) {
  if (const auto* l = std::get_if<LatticeStepLaw>(&law))
    return *l;
  throw config_error(what + " needs a lattice step law (bernoulli, left_continuous, lattice, point)");
}

} // namespace recwalk
