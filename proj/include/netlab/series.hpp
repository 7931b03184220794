#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "netlab/country.hpp"
#include "netlab/errors.hpp"

namespace netlab {

/// Yearly observations of one indicator (N1-N11 or E1-E8) for one country.
/// Years are unique and iterate in ascending order; gaps are allowed.
class IndicatorSeries {
 public:
  IndicatorSeries() = default;
  IndicatorSeries(CountryCode country, std::string indicator)
      : country_(std::move(country)), indicator_(std::move(indicator)) {}

  const CountryCode& country() const { return country_; }
  const std::string& indicator() const { return indicator_; }
  const std::map<int, double>& observations() const { return obs_; }
  std::size_t size() const { return obs_.size(); }

  void add(int year, double value) {
    auto [it, inserted] = obs_.emplace(year, value);
    if (!inserted)
      throw ValidationError("duplicate observation (" + country_.str() + ", " + indicator_ +
                            ", " + std::to_string(year) + ")");
  }

  std::optional<double> at(int year) const {
    auto it = obs_.find(year);
    if (it == obs_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const IndicatorSeries& other) const {
    return country_ == other.country_ && indicator_ == other.indicator_ && obs_ == other.obs_;
  }

 private:
  CountryCode country_;
  std::string indicator_;
  std::map<int, double> obs_;
};

}  // namespace netlab
