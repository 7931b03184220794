#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netlab/csv.hpp"
#include "netlab/dataset.hpp"

namespace netlab {

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

inline void require_header(std::string_view got, std::string_view expected) {
  auto fields = csv::split(got);
  auto want = csv::split(expected);
  if (fields != want)
    throw ValidationError("malformed header; expected columns: " + std::string(expected));
}

}  // namespace detail

/// How many rows the skip policy dropped, and why. CPIS extracts mark
/// confidential cells with non-numeric tokens; those rows are data gaps,
/// not errors.
struct SkipReport {
  std::size_t missing_or_non_numeric = 0;
  std::size_t non_positive = 0;

  std::size_t total() const { return missing_or_non_numeric + non_positive; }
};

struct PositionsParse {
  std::vector<PositionRecord> records;
  SkipReport skips;
};

/// Bilateral positions extract: header `source,target,year,amount_usd_millions`.
/// Rows with missing/non-numeric/zero/negative amounts are dropped and
/// counted; structural problems (header, field count, bad year) abort.
inline PositionsParse parse_positions_csv(std::string_view text) {
  PositionsParse result;
  bool saw_header = false;
  csv::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!saw_header) {
      detail::require_header(line, "source,target,year,amount_usd_millions");
      saw_header = true;
      return;
    }
    auto fields = csv::split(line);
    if (fields.size() != 4) throw CsvError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    auto year = csv::parse_int(fields[2]);
    if (!year) throw CsvError(line_no, "unparseable year '" + std::string(fields[2]) + "'");
    auto amount = csv::parse_double(fields[3]);
    if (!amount) {
      ++result.skips.missing_or_non_numeric;
      return;
    }
    if (*amount <= 0.0) {
      ++result.skips.non_positive;
      return;
    }
    PositionRecord rec;
    try {
      rec.source = CountryCode(fields[0]);
      rec.target = CountryCode(fields[1]);
    } catch (const ValidationError& e) {
      throw CsvError(line_no, e.what());
    }
    rec.year = *year;
    rec.amount = *amount;
    result.records.push_back(std::move(rec));
  });
  if (!saw_header)
    throw ValidationError("malformed header; expected columns: source,target,year,amount_usd_millions");
  return result;
}

struct EconParse {
  std::vector<IndicatorSeries> series;  // ordered by (country, indicator)
  std::size_t skipped = 0;              // missing / non-numeric values
};

/// Economic extract: header `country,indicator,year,value`. Values may be
/// negative (e.g. current account balances); only blank or non-numeric cells
/// are skipped. Duplicate (country,indicator,year) rows abort.
inline EconParse parse_econ_csv(std::string_view text) {
  EconParse result;
  std::map<std::pair<CountryCode, std::string>, IndicatorSeries> by_key;
  bool saw_header = false;
  csv::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (!saw_header) {
      detail::require_header(line, "country,indicator,year,value");
      saw_header = true;
      return;
    }
    auto fields = csv::split(line);
    if (fields.size() != 4) throw CsvError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    std::string code(fields[1]);
    require_econ_code(code);
    auto year = csv::parse_int(fields[2]);
    if (!year) throw CsvError(line_no, "unparseable year '" + std::string(fields[2]) + "'");
    auto value = csv::parse_double(fields[3]);
    if (!value) {
      ++result.skipped;
      return;
    }
    CountryCode country;
    try {
      country = CountryCode(fields[0]);
    } catch (const ValidationError& e) {
      throw CsvError(line_no, e.what());
    }
    auto key = std::make_pair(country, code);
    auto it = by_key.find(key);
    if (it == by_key.end())
      it = by_key.emplace(key, IndicatorSeries(country, code)).first;
    it->second.add(*year, *value);  // throws on duplicate year
  });
  if (!saw_header)
    throw ValidationError("malformed header; expected columns: country,indicator,year,value");
  for (auto& [key, series] : by_key) result.series.push_back(std::move(series));
  return result;
}

// ---------------------------------------------------------------------------
// Dataset directory: manifest.json + edges_<year>.csv + econ.csv. All numbers
// are written as shortest round-trip decimals, so load(save(ds)) == ds holds
// bit-exactly and reruns emit identical bytes.
// ---------------------------------------------------------------------------

inline void save_dataset(const Dataset& ds, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  nlohmann::json manifest;
  manifest["format_version"] = 1;
  manifest["countries"] = nlohmann::json::array();
  for (const auto& c : ds.countries) manifest["countries"].push_back(c.str());
  manifest["years"] = ds.years;
  manifest["min_edge_weight"] = ds.min_edge_weight;
  manifest["provenance"] = ds.provenance;
  detail::write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  for (const auto& [year, graph] : ds.graphs) {
    std::string body = "source,target,weight\n";
    graph.for_each_edge([&](int i, int j, double w) {
      body += graph.node(i).str();
      body += ',';
      body += graph.node(j).str();
      body += ',';
      body += csv::format_double(w);
      body += '\n';
    });
    detail::write_file(dir / ("edges_" + std::to_string(year) + ".csv"), body);
  }

  std::string econ = "country,indicator,year,value\n";
  for (const auto& [key, series] : ds.econ)
    for (const auto& [year, value] : series.observations()) {
      econ += key.first.str();
      econ += ',';
      econ += key.second;
      econ += ',';
      econ += std::to_string(year);
      econ += ',';
      econ += csv::format_double(value);
      econ += '\n';
    }
  detail::write_file(dir / "econ.csv", econ);
}

inline Dataset load_dataset(const std::filesystem::path& dir) {
  auto manifest_path = dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path))
    throw IoError("missing manifest: " + manifest_path.string());

  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(detail::read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt manifest " + manifest_path.string() + ": " + e.what());
  }
  for (const char* key : {"format_version", "countries", "years", "min_edge_weight", "provenance"})
    if (!manifest.contains(key))
      throw IoError("corrupt manifest: missing key '" + std::string(key) + "'");
  if (manifest["format_version"].get<int>() != 1)
    throw IoError("unsupported manifest format_version " + manifest["format_version"].dump());

  Dataset ds;
  try {
    for (const auto& c : manifest["countries"]) ds.countries.emplace_back(c.get<std::string>());
    ds.years = manifest["years"].get<std::vector<int>>();
    ds.min_edge_weight = manifest["min_edge_weight"].get<double>();
    ds.provenance = manifest["provenance"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt manifest: " + std::string(e.what()));
  }
  if (!std::is_sorted(ds.countries.begin(), ds.countries.end()) ||
      std::adjacent_find(ds.countries.begin(), ds.countries.end()) != ds.countries.end())
    throw ValidationError("manifest country list is not strictly ascending");
  if (!std::is_sorted(ds.years.begin(), ds.years.end()) ||
      std::adjacent_find(ds.years.begin(), ds.years.end()) != ds.years.end())
    throw ValidationError("manifest year list is not strictly ascending");

  // Detect drift in either direction between the manifest and the directory.
  std::set<int> listed(ds.years.begin(), ds.years.end());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("edges_", 0) != 0 || entry.path().extension() != ".csv") continue;
    auto year = csv::parse_int(std::string_view(name).substr(6, name.size() - 10));
    if (!year || !listed.count(*year))
      throw ValidationError("dataset mismatch: file " + name + " is not in the manifest year list");
  }

  for (int year : ds.years) {
    auto path = dir / ("edges_" + std::to_string(year) + ".csv");
    if (!std::filesystem::exists(path))
      throw ValidationError("dataset mismatch: manifest lists year " + std::to_string(year) +
                            " but " + path.filename().string() + " is missing");
    std::string text = detail::read_file(path);
    std::vector<EdgeRecord> records;
    bool saw_header = false;
    csv::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
      if (!saw_header) {
        detail::require_header(line, "source,target,weight");
        saw_header = true;
        return;
      }
      auto fields = csv::split(line);
      if (fields.size() != 3) throw CsvError(line_no, "expected 3 fields");
      auto weight = csv::parse_double(fields[2]);
      if (!weight) throw CsvError(line_no, "unparseable weight");
      records.push_back({CountryCode(fields[0]), CountryCode(fields[1]), *weight});
    });
    ds.graphs.emplace(year, build_graph(year, ds.countries, records));
  }

  auto econ_path = dir / "econ.csv";
  if (!std::filesystem::exists(econ_path)) throw IoError("missing econ.csv in " + dir.string());
  EconParse econ = parse_econ_csv(detail::read_file(econ_path));
  for (auto& series : econ.series) {
    if (!ds.has_country(series.country()))
      throw ValidationError("dataset mismatch: econ country " + series.country().str() +
                            " is not in the manifest country list");
    ds.econ.emplace(std::make_pair(series.country(), series.indicator()), std::move(series));
  }
  return ds;
}

}  // namespace netlab
