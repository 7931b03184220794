#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netlab/errors.hpp"

namespace netlab {

inline constexpr int kNetworkIndicatorCount = 11;
inline constexpr int kEconIndicatorCount = 8;

struct CodebookEntry {
  std::string_view code;
  std::string_view description;
};

// Row order of every correlation matrix.
inline const std::array<CodebookEntry, kNetworkIndicatorCount>& network_codebook() {
  static const std::array<CodebookEntry, kNetworkIndicatorCount> book = {{
      {"N1", "In-Degree"},
      {"N2", "Out-Degree"},
      {"N3", "Degree"},
      {"N4", "Weighted Degree"},
      {"N5", "Weighted In-Degree"},
      {"N6", "Weighted Out-Degree"},
      {"N7", "Eccentricity"},
      {"N8", "Closeness Centrality"},
      {"N9", "Betweenness Centrality"},
      {"N10", "Clustering Coefficient"},
      {"N11", "Strength"},
  }};
  return book;
}

// Column order of every correlation matrix.
inline const std::array<CodebookEntry, kEconIndicatorCount>& econ_codebook() {
  static const std::array<CodebookEntry, kEconIndicatorCount> book = {{
      {"E1", "Gross domestic product, current prices"},
      {"E2", "Gross domestic product, deflator"},
      {"E3", "Gross domestic product per capita, current prices"},
      {"E4", "Gross domestic product based on purchasing-power-parity (PPP) share of world total"},
      {"E5", "Inflation, average consumer prices"},
      {"E6", "General government revenue"},
      {"E7", "General government gross debt"},
      {"E8", "Current account balance"},
  }};
  return book;
}

inline std::vector<std::string> network_codes() {
  std::vector<std::string> codes;
  for (const auto& e : network_codebook()) codes.emplace_back(e.code);
  return codes;
}

inline std::vector<std::string> econ_codes() {
  std::vector<std::string> codes;
  for (const auto& e : econ_codebook()) codes.emplace_back(e.code);
  return codes;
}

inline bool is_econ_code(std::string_view code) {
  for (const auto& e : econ_codebook())
    if (e.code == code) return true;
  return false;
}

inline void require_econ_code(std::string_view code) {
  if (is_econ_code(code)) return;
  std::string valid;
  for (const auto& e : econ_codebook()) {
    if (!valid.empty()) valid += ", ";
    valid += e.code;
  }
  throw ValidationError("unknown indicator code '" + std::string(code) + "'; valid codes: " + valid);
}

}  // namespace netlab
