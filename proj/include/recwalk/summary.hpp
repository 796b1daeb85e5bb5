#pragma once

// Per-replicate results of a Monte Carlo run, kept in replicate order.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recwalk/errors.hpp"

namespace recwalk {

/// Shortest round-trip text for a double ("%.17g").
inline std::string format_double(double v) {
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  if (std::isnan(v))
    return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class EmpiricalSummary {
public:
  EmpiricalSummary() = default;
  EmpiricalSummary(std::string statistic, std::vector<double> values, std::uint64_t first_index = 0)
    : statistic_(std::move(statistic)), values_(std::move(values)), first_index_(first_index) {}

  const std::string& statistic() const { return statistic_; }
  const std::vector<double>& values() const { return values_; }
  std::uint64_t first_index() const { return first_index_; }
  std::size_t count() const { return values_.size(); }

  /// Raw moment E[X^m], accumulated in replicate order.
  double moment(int m) const {
    require(!values_.empty(), "empty summary");
    long double acc = 0;
    for (double v : values_)
      acc += std::pow(static_cast<long double>(v), m);
    return static_cast<double>(acc / static_cast<long double>(values_.size()));
  }
  double mean() const { return moment(1); }
  double variance() const {
    require(values_.size() >= 2, "variance needs two values");
    const long double m = mean();
    long double acc = 0;
    for (double v : values_)
      acc += (v - m) * (v - m);
    return static_cast<double>(acc / static_cast<long double>(values_.size() - 1));
  }
  double standard_error() const { return std::sqrt(variance() / static_cast<double>(count())); }
  /// E[X^2]/E[X]^2.
  double moment_ratio() const {
    const double m1 = moment(1);
    return moment(2) / (m1 * m1);
  }

  bool integral() const {
    for (double v : values_)
      if (v != std::floor(v) || std::abs(v) > 9.0e15)
        return false;
    return true;
  }

  /// Value -> count; only meaningful for integer-valued statistics.
  std::map<std::int64_t, std::uint64_t> histogram() const {
    require(integral(), "histogram needs integer-valued samples");
    std::map<std::int64_t, std::uint64_t> h;
    for (double v : values_)
      ++h[static_cast<std::int64_t>(v)];
    return h;
  }

  /// Concatenates an adjacent block of replicates (on either side).
  void merge(const EmpiricalSummary& other) {
    if (other.values_.empty())
      return;
    if (values_.empty()) {
      *this = other;
      return;
    }
    require(other.statistic_ == statistic_, "cannot merge different statistics");
    if (other.first_index_ == first_index_ + values_.size()) {
      values_.insert(values_.end(), other.values_.begin(), other.values_.end());
    } else if (first_index_ == other.first_index_ + other.values_.size()) {
      values_.insert(values_.begin(), other.values_.begin(), other.values_.end());
      first_index_ = other.first_index_;
    } else {
      throw precondition_error("merged replicate blocks must be adjacent");
    }
  }

  void write_csv(std::ostream& os) const {
    os << "replicate,value\n";
    for (std::size_t i = 0; i < values_.size(); ++i)
      os << first_index_ + i << ',' << format_double(values_[i]) << '\n';
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["statistic"] = statistic_;
    j["count"] = values_.size();
    j["mean"] = values_.empty() ? 0.0 : mean();
    j["variance"] = values_.size() < 2 ? 0.0 : variance();
    auto moments = nlohmann::ordered_json::array();
    if (!values_.empty())
      for (int m = 1; m <= 4; ++m)
        moments.push_back(moment(m));
    j["moments"] = moments;
    auto hist = nlohmann::ordered_json::array();
    if (!values_.empty() && integral())
      for (const auto& [v, c] : histogram())
        hist.push_back({v, c});
    j["histogram"] = hist;
    return j;
  }

private:
  std::string statistic_;
  std::vector<double> values_;
  std::uint64_t first_index_ = 0;
};

} // namespace recwalk
