#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "netlab/correlation.hpp"
#include "netlab/csv.hpp"
#include "netlab/tiering.hpp"

namespace netlab {

enum class DocFormat { Text, Csv, Json, Html };

inline DocFormat parse_doc_format(std::string_view name) {
  if (name == "text") return DocFormat::Text;
  if (name == "csv") return DocFormat::Csv;
  if (name == "json") return DocFormat::Json;
  if (name == "html") return DocFormat::Html;
  throw ValidationError("unknown format '" + std::string(name) + "'; expected text|csv|json|html");
}

struct ReportConfig {
  double threshold = 0.5;  // weak-cell cutoff, recorded in every header
  int decimals = 3;

  void validate() const {
    if (threshold < 0.0 || threshold > 1.0) throw ValidationError("threshold must lie in [0,1]");
    if (decimals < 1) throw ValidationError("decimals must be >= 1");
  }
};

namespace detail {

// Magnitude to `decimals` places, negatives wrapped in parentheses, matching
// the published matrix convention: 0.884 vs (0.533). Rounding is display-only.
inline std::string format_cell(const CorrelationCell& cell, int decimals) {
  if (!cell.r) return "—";  // em dash
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, std::abs(*cell.r));
  std::string s(buf);
  if (*cell.r < 0.0) s = "(" + s + ")";
  return s;
}

// Right-pad by display columns; the em dash is 3 bytes but 1 column.
inline std::string right_align(const std::string& s, int width) {
  int display = (s == "—") ? 1 : static_cast<int>(s.size());
  int pad = width > display ? width - display : 0;
  return std::string(static_cast<std::size_t>(pad), ' ') + s;
}

inline double display_rounded(double r, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, r);
  return csv::parse_double(buf).value();
}

inline std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_matrix_text(const CorrelationMatrix& m, const ReportConfig& cfg) {
  cfg.validate();
  const int w = cfg.decimals + 4;  // widest cell: "(x.ddd)"
  std::string out;
  out += "correlation report: " + m.country().str() + "\n";
  out += "weak threshold: |r| < " + csv::format_double(m.threshold()) + "\n";
  out += "observations: pairwise-complete years\n\n";

  out += std::string(4, ' ');
  for (const auto& col : econ_codebook())
    out += " " + detail::right_align(std::string(col.code), w);
  out += "\n";
  for (int i = 0; i < kNetworkIndicatorCount; ++i) {
    std::string label(network_codebook()[static_cast<std::size_t>(i)].code);
    label.resize(4, ' ');
    out += label;
    for (int j = 0; j < kEconIndicatorCount; ++j)
      out += " " + detail::right_align(detail::format_cell(m.at(i, j), cfg.decimals), w);
    out += "\n";
  }
  return out;
}

inline std::string render_matrix_csv(const CorrelationMatrix& m, const ReportConfig& cfg) {
  cfg.validate();
  std::string out;
  out += "# country: " + m.country().str() + "\n";
  out += "# threshold: " + csv::format_double(m.threshold()) + "\n";
  out += "# observations: pairwise-complete years\n";
  out += "indicator";
  for (const auto& col : econ_codebook()) out += "," + std::string(col.code);
  out += "\n";
  for (int i = 0; i < kNetworkIndicatorCount; ++i) {
    out += std::string(network_codebook()[static_cast<std::size_t>(i)].code);
    for (int j = 0; j < kEconIndicatorCount; ++j)
      out += "," + detail::format_cell(m.at(i, j), cfg.decimals);
    out += "\n";
  }
  return out;
}

inline std::string render_matrix_json(const CorrelationMatrix& m, const ReportConfig& cfg) {
  cfg.validate();
  nlohmann::json doc;
  doc["country"] = m.country().str();
  doc["threshold"] = m.threshold();
  doc["observations"] = "pairwise-complete years";
  doc["decimals"] = cfg.decimals;
  doc["rows"] = nlohmann::json::array();
  for (int i = 0; i < kNetworkIndicatorCount; ++i) {
    nlohmann::json row;
    row["indicator"] = std::string(network_codebook()[static_cast<std::size_t>(i)].code);
    row["cells"] = nlohmann::json::array();
    for (int j = 0; j < kEconIndicatorCount; ++j) {
      const CorrelationCell& cell = m.at(i, j);
      nlohmann::json c;
      c["econ"] = std::string(econ_codebook()[static_cast<std::size_t>(j)].code);
      if (cell.r)
        c["r"] = detail::display_rounded(*cell.r, cfg.decimals);
      else
        c["r"] = nullptr;
      c["n_obs"] = cell.n_obs;
      c["class"] = to_string(cell.cls);
      if (!cell.note.empty()) c["note"] = cell.note;
      row["cells"].push_back(std::move(c));
    }
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

inline std::string render_matrix_html(const CorrelationMatrix& m, const ReportConfig& cfg) {
  cfg.validate();
  auto cls_name = [](CellClass c) {
    switch (c) {
      case CellClass::Positive: return "pos";
      case CellClass::Negative: return "neg";
      case CellClass::Weak: return "weak";
      case CellClass::Undefined: return "undef";
    }
    return "undef";
  };
  std::string out;
  out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>correlation report: " + detail::html_escape(m.country().str()) + "</title>\n";
  out += "<style>\n";
  out += "table{border-collapse:collapse;font-family:monospace}\n";
  out += "td,th{border:1px solid #999;padding:3px 9px;text-align:right}\n";
  out += ".pos{background:#7fbf7f}.neg{background:#e57373}.weak{background:#ffee58}.undef{background:#eeeeee}\n";
  out += "</style>\n</head>\n<body>\n";
  out += "<h1>correlation report: " + detail::html_escape(m.country().str()) + "</h1>\n";
  out += "<p>weak threshold: |r| &lt; " + csv::format_double(m.threshold()) +
         "<br>observations: pairwise-complete years</p>\n";
  out += "<table>\n<tr><th></th>";
  for (const auto& col : econ_codebook()) out += "<th>" + std::string(col.code) + "</th>";
  out += "</tr>\n";
  for (int i = 0; i < kNetworkIndicatorCount; ++i) {
    out += "<tr><th>" + std::string(network_codebook()[static_cast<std::size_t>(i)].code) + "</th>";
    for (int j = 0; j < kEconIndicatorCount; ++j) {
      const CorrelationCell& cell = m.at(i, j);
      out += "<td class=\"" + std::string(cls_name(cell.cls)) + "\">" +
             detail::format_cell(cell, cfg.decimals) + "</td>";
    }
    out += "</tr>\n";
  }
  out += "</table>\n</body>\n</html>\n";
  return out;
}

inline std::string render_matrix(const CorrelationMatrix& m, const ReportConfig& cfg,
                                 DocFormat format) {
  switch (format) {
    case DocFormat::Text: return render_matrix_text(m, cfg);
    case DocFormat::Csv: return render_matrix_csv(m, cfg);
    case DocFormat::Json: return render_matrix_json(m, cfg);
    case DocFormat::Html: return render_matrix_html(m, cfg);
  }
  throw ValidationError("unknown document format");
}

/// Three-column tier table: per-tier counts in the header, members ascending
/// by average closeness.
inline std::string render_tier_table(const TierClassification& cls) {
  auto counts = cls.counts();
  std::vector<std::vector<const TierAssignment*>> by_tier(3);
  for (const auto& a : cls.assignments)
    by_tier[static_cast<std::size_t>(a.tier)].push_back(&a);

  std::size_t code_width = 4;
  for (const auto& a : cls.assignments) code_width = std::max(code_width, a.country.str().size());
  const std::size_t cell = code_width + 9;  // code + two spaces + "d.ddd" + gap

  auto tier_cell = [&](const TierAssignment* a) {
    if (!a) return std::string(cell, ' ');
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", a->avg_closeness);
    std::string s = a->country.str();
    s.resize(code_width + 2, ' ');
    s += buf;
    s.resize(cell, ' ');
    return s;
  };

  std::string out;
  out += "tier classification by average closeness (mean geodesic distance)\n";
  out += "tier 1: avg <= " + csv::format_double(cls.thresholds.t1_max);
  out += "   tier 2: avg <= " + csv::format_double(cls.thresholds.t2_max);
  out += "   tier 3: avg > " + csv::format_double(cls.thresholds.t2_max) + "\n\n";

  std::size_t rows = 0;
  for (int t = 0; t < 3; ++t) {
    std::string head = "Tier " + std::to_string(t + 1) + " (n = " +
                       std::to_string(counts[static_cast<std::size_t>(t)]) + ")";
    head.resize(cell, ' ');
    out += head;
    rows = std::max(rows, by_tier[static_cast<std::size_t>(t)].size());
  }
  out += "\n";
  for (std::size_t row = 0; row < rows; ++row) {
    std::string line;
    for (int t = 0; t < 3; ++t) {
      const auto& members = by_tier[static_cast<std::size_t>(t)];
      line += tier_cell(row < members.size() ? members[row] : nullptr);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  if (!cls.untierable.empty()) {
    out += "\nuntiered (no defined closeness):";
    for (const auto& c : cls.untierable) out += " " + c.str();
    out += "\n";
  }
  return out;
}

}  // namespace netlab
