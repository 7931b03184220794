#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netlab/country.hpp"
#include "netlab/errors.hpp"

namespace netlab {

struct EdgeRecord {
  CountryCode source;
  CountryCode target;
  double weight = 0.0;  // USD millions, strictly positive
};

enum class FlowRole { Source, Sink, Intermediate, Isolated };

inline std::string to_string(FlowRole role) {
  switch (role) {
    case FlowRole::Source: return "SOURCE";
    case FlowRole::Sink: return "SINK";
    case FlowRole::Intermediate: return "INTERMEDIATE";
    case FlowRole::Isolated: return "ISOLATED";
  }
  return "?";
}

/// One year's directed weighted investment snapshot. Immutable once built;
/// nodes are kept in lexicographic order and adjacency lists sorted, so every
/// downstream matrix and export inherits a canonical layout.
class YearGraph {
 public:
  YearGraph() = default;

  static YearGraph build(int year, const std::vector<CountryCode>& nodes,
                         const std::vector<EdgeRecord>& records) {
    YearGraph g;
    g.year_ = year;
    std::set<CountryCode> ordered(nodes.begin(), nodes.end());
    g.nodes_.assign(ordered.begin(), ordered.end());
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) g.index_[g.nodes_[i]] = static_cast<int>(i);

    // Aggregate duplicate (source,target) records before materializing edges.
    std::map<std::pair<int, int>, double> agg;
    for (const auto& rec : records) {
      if (rec.source == rec.target)
        throw ValidationError("self-loop record " + rec.source.str() + " -> " + rec.target.str());
      auto si = g.index_.find(rec.source);
      if (si == g.index_.end()) throw ValidationError("unknown node " + rec.source.str());
      auto ti = g.index_.find(rec.target);
      if (ti == g.index_.end()) throw ValidationError("unknown node " + rec.target.str());
      if (!(rec.weight > 0.0))
        throw ValidationError("non-positive weight on edge " + rec.source.str() + " -> " +
                              rec.target.str());
      agg[{si->second, ti->second}] += rec.weight;
    }

    g.out_.resize(g.nodes_.size());
    g.in_.resize(g.nodes_.size());
    for (const auto& [key, weight] : agg) {
      g.out_[key.first].push_back({key.second, weight});
      g.in_[key.second].push_back({key.first, weight});
      g.total_weight_ += weight;
    }
    g.edge_count_ = agg.size();
    // std::map iteration already yields sorted out-lists; in-lists need a sort.
    for (auto& lst : g.in_) std::sort(lst.begin(), lst.end());
    return g;
  }

  int year() const { return year_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<CountryCode>& nodes() const { return nodes_; }
  const CountryCode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t edge_count() const { return edge_count_; }
  double total_weight() const { return total_weight_; }

  bool has_node(const CountryCode& code) const { return index_.count(code) > 0; }

  int index_of(const CountryCode& code) const {
    auto it = index_.find(code);
    if (it == index_.end()) throw ValidationError("unknown node " + code.str());
    return it->second;
  }

  // (neighbor index, weight), sorted by neighbor index.
  const std::vector<std::pair<int, double>>& out_edges(int i) const {
    return out_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::pair<int, double>>& in_edges(int i) const {
    return in_[static_cast<std::size_t>(i)];
  }

  std::optional<double> edge_weight(int from, int to) const {
    const auto& lst = out_[static_cast<std::size_t>(from)];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::pair<int, double>{to, 0.0});
    if (it != lst.end() && it->first == to) return it->second;
    return std::nullopt;
  }

  template <typename Fn>
  void for_each_edge(Fn&& fn) const {  // fn(from, to, weight), canonical order
    for (std::size_t i = 0; i < out_.size(); ++i)
      for (const auto& [j, w] : out_[i]) fn(static_cast<int>(i), j, w);
  }

  int in_degree(int i) const { return static_cast<int>(in_[static_cast<std::size_t>(i)].size()); }
  int out_degree(int i) const { return static_cast<int>(out_[static_cast<std::size_t>(i)].size()); }
  int degree(int i) const { return in_degree(i) + out_degree(i); }

  double weighted_in_degree(int i) const { return sum_weights(in_[static_cast<std::size_t>(i)]); }
  double weighted_out_degree(int i) const { return sum_weights(out_[static_cast<std::size_t>(i)]); }
  double weighted_degree(int i) const { return weighted_in_degree(i) + weighted_out_degree(i); }

  // Unique neighbors in either direction, sorted. The undirected projection
  // used by the centrality and clustering formulas.
  std::vector<int> undirected_neighbors(int i) const {
    std::vector<int> nbrs;
    const auto& out = out_[static_cast<std::size_t>(i)];
    const auto& in = in_[static_cast<std::size_t>(i)];
    nbrs.reserve(out.size() + in.size());
    for (const auto& [j, w] : out) nbrs.push_back(j);
    for (const auto& [j, w] : in) nbrs.push_back(j);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    return nbrs;
  }

  bool linked(int a, int b) const {  // edge in either direction
    return edge_weight(a, b).has_value() || edge_weight(b, a).has_value();
  }

  bool operator==(const YearGraph& other) const {
    return year_ == other.year_ && nodes_ == other.nodes_ && out_ == other.out_;
  }

 private:
  static double sum_weights(const std::vector<std::pair<int, double>>& lst) {
    double s = 0.0;
    for (const auto& [j, w] : lst) s += w;
    return s;
  }

  int year_ = 0;
  std::vector<CountryCode> nodes_;
  std::map<CountryCode, int> index_;
  std::vector<std::vector<std::pair<int, double>>> out_;
  std::vector<std::vector<std::pair<int, double>>> in_;
  std::size_t edge_count_ = 0;
  double total_weight_ = 0.0;
};

inline YearGraph build_graph(int year, const std::vector<CountryCode>& nodes,
                             const std::vector<EdgeRecord>& records) {
  return YearGraph::build(year, nodes, records);
}

inline int in_degree(const YearGraph& g, const CountryCode& v) { return g.in_degree(g.index_of(v)); }
inline int out_degree(const YearGraph& g, const CountryCode& v) { return g.out_degree(g.index_of(v)); }
inline int degree(const YearGraph& g, const CountryCode& v) { return g.degree(g.index_of(v)); }

inline double weighted_in_degree(const YearGraph& g, const CountryCode& v) {
  return g.weighted_in_degree(g.index_of(v));
}
inline double weighted_out_degree(const YearGraph& g, const CountryCode& v) {
  return g.weighted_out_degree(g.index_of(v));
}
inline double weighted_degree(const YearGraph& g, const CountryCode& v) {
  return g.weighted_degree(g.index_of(v));
}

inline FlowRole classify_flow_role(const YearGraph& g, const CountryCode& v) {
  int i = g.index_of(v);
  int in = g.in_degree(i), out = g.out_degree(i);
  if (in == 0 && out == 0) return FlowRole::Isolated;
  if (in == 0) return FlowRole::Source;
  if (out == 0) return FlowRole::Sink;
  return FlowRole::Intermediate;
}

/// Directed hop distances for all ordered pairs; kUnreachable marks pairs with
/// no directed path.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {
    for (int i = 0; i < n; ++i) at(i, i) = 0;
  }

  int n() const { return n_; }
  int& at(int i, int j) { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  int at(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }

 private:
  int n_;
  std::vector<int> dist_;
};

inline DistanceMatrix shortest_paths(const YearGraph& g) {
  const int n = g.size();
  DistanceMatrix dm(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& [v, w] : g.out_edges(u)) {
        if (v != s && !dm.reachable(s, v)) {
          dm.at(s, v) = dm.at(s, u) + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dm;
}

}  // namespace netlab
