#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netlab/codebooks.hpp"
#include "netlab/graph.hpp"
#include "netlab/series.hpp"

namespace netlab {

struct PositionRecord {
  CountryCode source;
  CountryCode target;
  int year = 0;
  double amount = 0.0;  // USD millions
};

/// Normalized collection: one graph per year over a shared country roster,
/// plus the economic series. Immutable by convention once built.
struct Dataset {
  std::vector<CountryCode> countries;  // lexicographic
  std::vector<int> years;              // ascending
  std::map<int, YearGraph> graphs;
  // (country, econ code) -> series; keys orderered, so iteration is canonical.
  std::map<std::pair<CountryCode, std::string>, IndicatorSeries> econ;
  std::string provenance;
  double min_edge_weight = 0.0;

  const YearGraph& graph(int year) const {
    auto it = graphs.find(year);
    if (it == graphs.end()) throw ValidationError("no graph for year " + std::to_string(year));
    return it->second;
  }

  bool has_country(const CountryCode& c) const {
    return std::binary_search(countries.begin(), countries.end(), c);
  }

  bool operator==(const Dataset& other) const {
    return countries == other.countries && years == other.years && graphs == other.graphs &&
           econ == other.econ && provenance == other.provenance &&
           min_edge_weight == other.min_edge_weight;
  }
};

/// Country roster is the union of every code seen in positions or economic
/// series; every yearly graph is built over that full roster. Edges survive
/// only if their aggregated weight exceeds min_edge_weight.
inline Dataset build_dataset(const std::vector<PositionRecord>& positions,
                             const std::vector<IndicatorSeries>& econ,
                             double min_edge_weight = 0.0,
                             std::string provenance = {}) {
  if (min_edge_weight < 0.0) throw ValidationError("min_edge_weight must be >= 0");

  Dataset ds;
  ds.min_edge_weight = min_edge_weight;
  ds.provenance = std::move(provenance);

  std::set<CountryCode> roster;
  std::set<int> years;
  for (const auto& p : positions) {
    roster.insert(p.source);
    roster.insert(p.target);
    years.insert(p.year);
  }
  for (const auto& s : econ) roster.insert(s.country());
  ds.countries.assign(roster.begin(), roster.end());
  ds.years.assign(years.begin(), years.end());

  // Aggregate duplicates per year before the weight filter, so split
  // positions that jointly clear the threshold still form an edge.
  std::map<int, std::map<std::pair<CountryCode, CountryCode>, double>> per_year;
  for (const auto& p : positions) {
    if (p.source == p.target)
      throw ValidationError("self-loop record " + p.source.str() + " -> " + p.target.str());
    if (!(p.amount > 0.0))
      throw ValidationError("non-positive position " + p.source.str() + " -> " + p.target.str());
    per_year[p.year][{p.source, p.target}] += p.amount;
  }
  for (int year : ds.years) {
    std::vector<EdgeRecord> records;
    for (const auto& [pair, weight] : per_year[year])
      if (weight > min_edge_weight) records.push_back({pair.first, pair.second, weight});
    ds.graphs.emplace(year, build_graph(year, ds.countries, records));
  }

  for (const auto& s : econ) {
    require_econ_code(s.indicator());
    auto key = std::make_pair(s.country(), s.indicator());
    if (!ds.econ.emplace(key, s).second)
      throw ValidationError("duplicate series (" + s.country().str() + ", " + s.indicator() + ")");
  }
  return ds;
}

}  // namespace netlab
