#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netlab/analysis.hpp"

namespace netlab {

enum class Tier { Tier1, Tier2, Tier3 };

inline std::string to_string(Tier t) {
  switch (t) {
    case Tier::Tier1: return "TIER1";
    case Tier::Tier2: return "TIER2";
    case Tier::Tier3: return "TIER3";
  }
  return "?";
}

/// Tier cutoffs on average mean-distance closeness. The published scheme's
/// 1.20/1.21 gap is closed upward: everything above t2_max is Tier 3.
struct TierThresholds {
  double t1_max = 1.05;
  double t2_max = 1.20;

  void validate() const {
    if (!(1.0 <= t1_max && t1_max < t2_max))
      throw ValidationError("tier thresholds must satisfy 1 <= t1_max < t2_max");
  }
};

struct TierAssignment {
  CountryCode country;
  double avg_closeness = 0.0;
  Tier tier = Tier::Tier1;
  int years_counted = 0;
};

/// Mean over the defined yearly values; missing years simply don't count.
inline double average_closeness(std::span<const std::optional<double>> yearly) {
  double sum = 0.0;
  int counted = 0;
  for (const auto& v : yearly) {
    if (!v) continue;
    sum += *v;
    ++counted;
  }
  if (counted == 0) throw ValidationError("no defined closeness values; country cannot be tiered");
  return sum / counted;
}

inline Tier assign_tier(double avg, const TierThresholds& th = {}) {
  th.validate();
  if (avg < 1.0) throw ValidationError("average closeness below 1 is impossible for hop distances");
  if (avg <= th.t1_max) return Tier::Tier1;
  if (avg <= th.t2_max) return Tier::Tier2;
  return Tier::Tier3;
}

struct TierClassification {
  std::vector<TierAssignment> assignments;  // sorted: tier, then avg, then code
  std::vector<CountryCode> untierable;      // no defined closeness in any year
  TierThresholds thresholds;

  std::array<int, 3> counts() const {
    std::array<int, 3> c{0, 0, 0};
    for (const auto& a : assignments) ++c[static_cast<std::size_t>(a.tier)];
    return c;
  }
};

inline TierClassification classify_all(const Dataset& ds, const TierThresholds& th = {}) {
  th.validate();
  TierClassification result;
  result.thresholds = th;

  for (const auto& country : ds.countries) {
    std::vector<std::optional<double>> yearly;
    yearly.reserve(ds.years.size());
    for (int year : ds.years) {
      const YearGraph& g = ds.graph(year);
      yearly.push_back(closeness_mean_distance(g, g.index_of(country)));
    }
    int counted = static_cast<int>(
        std::count_if(yearly.begin(), yearly.end(), [](const auto& v) { return v.has_value(); }));
    if (counted == 0) {
      result.untierable.push_back(country);
      continue;
    }
    TierAssignment a;
    a.country = country;
    a.avg_closeness = average_closeness(yearly);
    a.tier = assign_tier(a.avg_closeness, th);
    a.years_counted = counted;
    result.assignments.push_back(std::move(a));
  }

  std::sort(result.assignments.begin(), result.assignments.end(),
            [](const TierAssignment& a, const TierAssignment& b) {
              if (a.tier != b.tier) return a.tier < b.tier;
              if (a.avg_closeness != b.avg_closeness) return a.avg_closeness < b.avg_closeness;
              return a.country < b.country;
            });
  return result;
}

}  // namespace netlab
