#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netlab/codebooks.hpp"
#include "netlab/errors.hpp"
#include "netlab/series.hpp"

namespace netlab {

/// Pearson product-moment correlation in the sum-of-products form
///   r = (n*Sxy - Sx*Sy) / sqrt((n*Sxx - Sx^2)(n*Syy - Sy^2)).
/// Returns nullopt when either series has zero variance (a constant
/// indicator); the result is clamped against sub-1e-12 rounding overshoot.
inline std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ValidationError("series length mismatch: " + std::to_string(x.size()) + " vs " +
                          std::to_string(y.size()));
  const std::size_t n = x.size();
  if (n < 2) throw ValidationError("correlation needs at least 2 observations");

  bool x_const = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
  bool y_const = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
  if (x_const || y_const) return std::nullopt;

  double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  double num = dn * sxy - sx * sy;
  double var_x = dn * sxx - sx * sx;
  double var_y = dn * syy - sy * sy;
  if (var_x <= 0.0 || var_y <= 0.0) return std::nullopt;  // variance lost to rounding
  double r = num / std::sqrt(var_x * var_y);
  return std::clamp(r, -1.0, 1.0);
}

/// Pairs up the years present in both series, ascending. Throws
/// InsufficientOverlapError (carrying the common-year count) below 2 years.
inline std::pair<std::vector<double>, std::vector<double>> align_series(
    const IndicatorSeries& a, const IndicatorSeries& b) {
  std::vector<double> xs, ys;
  for (const auto& [year, value] : a.observations()) {
    auto other = b.at(year);
    if (!other) continue;
    xs.push_back(value);
    ys.push_back(*other);
  }
  if (xs.size() < 2) throw InsufficientOverlapError(xs.size());
  return {std::move(xs), std::move(ys)};
}

enum class CellClass { Positive, Negative, Weak, Undefined };

inline std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::Positive: return "POSITIVE";
    case CellClass::Negative: return "NEGATIVE";
    case CellClass::Weak: return "WEAK";
    case CellClass::Undefined: return "UNDEFINED";
  }
  return "?";
}

inline CellClass classify_cell(std::optional<double> r, double threshold) {
  if (!r) return CellClass::Undefined;
  if (std::abs(*r) < threshold) return CellClass::Weak;
  return *r < 0.0 ? CellClass::Negative : CellClass::Positive;
}

struct CorrelationCell {
  std::optional<double> r;
  int n_obs = 0;
  CellClass cls = CellClass::Undefined;
  std::string note;  // set when undefined, e.g. overlap or variance reason
};

/// The 11x8 matrix of one country: rows N1-N11, columns E1-E8, both in
/// codebook order regardless of how the input series were supplied.
class CorrelationMatrix {
 public:
  CorrelationMatrix(CountryCode country, double threshold)
      : country_(std::move(country)), threshold_(threshold) {
    if (threshold < 0.0 || threshold > 1.0)
      throw ValidationError("threshold must lie in [0,1]");
    cells_.resize(kNetworkIndicatorCount * kEconIndicatorCount);
  }

  const CountryCode& country() const { return country_; }
  double threshold() const { return threshold_; }

  CorrelationCell& at(int row, int col) { return cells_[index(row, col)]; }
  const CorrelationCell& at(int row, int col) const { return cells_[index(row, col)]; }

 private:
  static std::size_t index(int row, int col) {
    if (row < 0 || row >= kNetworkIndicatorCount || col < 0 || col >= kEconIndicatorCount)
      throw ValidationError("matrix cell out of range");
    return static_cast<std::size_t>(row) * kEconIndicatorCount + static_cast<std::size_t>(col);
  }

  CountryCode country_;
  double threshold_;
  std::vector<CorrelationCell> cells_;
};

/// Builds the matrix from 11 network and 8 economic series. Series are keyed
/// by indicator code, so supply order does not matter. Pairs with fewer than
/// 2 common years or constant values become UNDEFINED cells; the matrix is
/// always produced in full.
inline CorrelationMatrix correlation_matrix(const CountryCode& country,
                                            const std::vector<IndicatorSeries>& network,
                                            const std::vector<IndicatorSeries>& economic,
                                            double threshold) {
  std::map<std::string, const IndicatorSeries*> by_code;
  for (const auto& s : network) by_code[s.indicator()] = &s;
  for (const auto& s : economic) by_code[s.indicator()] = &s;

  auto lookup = [&](std::string_view code) -> const IndicatorSeries* {
    auto it = by_code.find(std::string(code));
    if (it == by_code.end())
      throw ValidationError("missing series for indicator " + std::string(code));
    return it->second;
  };

  CorrelationMatrix m(country, threshold);
  const auto& rows = network_codebook();
  const auto& cols = econ_codebook();
  for (int i = 0; i < kNetworkIndicatorCount; ++i) {
    const IndicatorSeries* ns = lookup(rows[static_cast<std::size_t>(i)].code);
    for (int j = 0; j < kEconIndicatorCount; ++j) {
      const IndicatorSeries* es = lookup(cols[static_cast<std::size_t>(j)].code);
      CorrelationCell& cell = m.at(i, j);
      try {
        auto [xs, ys] = align_series(*ns, *es);
        cell.n_obs = static_cast<int>(xs.size());
        cell.r = pearson(xs, ys);
        if (!cell.r) cell.note = "zero variance";
      } catch (const InsufficientOverlapError& e) {
        cell.n_obs = static_cast<int>(e.common_years);
        cell.note = e.what();
      }
      cell.cls = classify_cell(cell.r, threshold);
    }
  }
  return m;
}

/// Matrix straight from known coefficients (row-major N1..N11 x E1..E8),
/// e.g. when re-rendering published values.
inline CorrelationMatrix matrix_from_values(
    const CountryCode& country,
    const std::vector<std::optional<double>>& values,
    double threshold, int n_obs) {
  if (values.size() != static_cast<std::size_t>(kNetworkIndicatorCount * kEconIndicatorCount))
    throw ValidationError("expected " +
                          std::to_string(kNetworkIndicatorCount * kEconIndicatorCount) +
                          " cell values, got " + std::to_string(values.size()));
  CorrelationMatrix m(country, threshold);
  for (int i = 0; i < kNetworkIndicatorCount; ++i)
    for (int j = 0; j < kEconIndicatorCount; ++j) {
      CorrelationCell& cell = m.at(i, j);
      cell.r = values[static_cast<std::size_t>(i) * kEconIndicatorCount +
                      static_cast<std::size_t>(j)];
      cell.n_obs = n_obs;
      cell.cls = classify_cell(cell.r, threshold);
    }
  return m;
}

}  // namespace netlab
