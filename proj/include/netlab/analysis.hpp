#pragma once

#include <string>
#include <vector>

#include "netlab/correlation.hpp"
#include "netlab/dataset.hpp"
#include "netlab/metrics.hpp"

namespace netlab {

/// The 11 network-indicator series of one country across all dataset years,
/// in codebook order. Years where an indicator is undefined are simply
/// absent from that series.
inline std::vector<IndicatorSeries> network_indicator_series(const Dataset& ds,
                                                             const CountryCode& country) {
  if (!ds.has_country(country))
    throw ValidationError("unknown country " + country.str());
  std::vector<IndicatorSeries> series;
  series.reserve(kNetworkIndicatorCount);
  for (const auto& entry : network_codebook())
    series.emplace_back(country, std::string(entry.code));

  for (int year : ds.years) {
    NodeIndicators ni = node_indicator_vector(ds.graph(year), country);
    for (int code = 1; code <= kNetworkIndicatorCount; ++code) {
      auto v = ni.value(code);
      if (v) series[static_cast<std::size_t>(code - 1)].add(year, *v);
    }
  }
  return series;
}

/// The 8 economic series of one country in codebook order; indicators the
/// dataset lacks come back as empty series (their cells end up UNDEFINED).
inline std::vector<IndicatorSeries> econ_series_for(const Dataset& ds,
                                                    const CountryCode& country) {
  if (!ds.has_country(country))
    throw ValidationError("unknown country " + country.str());
  std::vector<IndicatorSeries> series;
  series.reserve(kEconIndicatorCount);
  for (const auto& entry : econ_codebook()) {
    auto it = ds.econ.find({country, std::string(entry.code)});
    if (it != ds.econ.end())
      series.push_back(it->second);
    else
      series.emplace_back(country, std::string(entry.code));
  }
  return series;
}

inline CorrelationMatrix correlate_country(const Dataset& ds, const CountryCode& country,
                                           double threshold) {
  return correlation_matrix(country, network_indicator_series(ds, country),
                            econ_series_for(ds, country), threshold);
}

}  // namespace netlab
