#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "netlab/graph.hpp"

namespace netlab {

// ---------------------------------------------------------------------------
// Degree centrality family. Per-node values use the undirected projection so
// the n-1 maximum is attainable; raw in/out counts stay available on the
// graph itself as indicators N1-N3.
// ---------------------------------------------------------------------------

inline double degree_centrality(const YearGraph& g, int i) {
  if (g.size() < 2) throw ValidationError("degree centrality undefined for graphs with < 2 nodes");
  return static_cast<double>(g.undirected_neighbors(i).size()) / (g.size() - 1);
}

inline double degree_centrality(const YearGraph& g, const CountryCode& v) {
  return degree_centrality(g, g.index_of(v));
}

// Freeman centralization of the per-node values: sum of gaps to the maximum,
// scaled by the star graph's sum (n-2 for values normalized to [0,1]).
inline double degree_centralization(const YearGraph& g) {
  const int n = g.size();
  if (n < 3) throw ValidationError("degree centralization undefined for graphs with < 3 nodes");
  std::vector<double> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = degree_centrality(g, i);
  double cmax = *std::max_element(c.begin(), c.end());
  double sum = 0.0;
  for (double ci : c) sum += cmax - ci;
  return sum / (n - 2);
}

// ---------------------------------------------------------------------------
// Closeness family. Distances are directed hop counts; nodes that reach
// nothing get no value rather than a zero. Denominators count reachable
// nodes only, which keeps sparse-year values finite.
// ---------------------------------------------------------------------------

inline std::optional<double> closeness_reciprocal(const YearGraph& g, int i,
                                                  const DistanceMatrix& dm) {
  long long total = 0;
  int reachable = 0;
  for (int j = 0; j < g.size(); ++j) {
    if (j == i || !dm.reachable(i, j)) continue;
    total += dm.at(i, j);
    ++reachable;
  }
  if (reachable == 0) return std::nullopt;
  return static_cast<double>(reachable) / static_cast<double>(total);
}

inline std::optional<double> closeness_reciprocal(const YearGraph& g, int i) {
  return closeness_reciprocal(g, i, shortest_paths(g));
}
inline std::optional<double> closeness_reciprocal(const YearGraph& g, const CountryCode& v) {
  return closeness_reciprocal(g, g.index_of(v));
}

// Mean geodesic distance to reachable nodes; >= 1 whenever defined. This is
// indicator N8 and the tiering input: lower means more central.
inline std::optional<double> closeness_mean_distance(const YearGraph& g, int i,
                                                     const DistanceMatrix& dm) {
  long long total = 0;
  int reachable = 0;
  for (int j = 0; j < g.size(); ++j) {
    if (j == i || !dm.reachable(i, j)) continue;
    total += dm.at(i, j);
    ++reachable;
  }
  if (reachable == 0) return std::nullopt;
  return static_cast<double>(total) / static_cast<double>(reachable);
}

inline std::optional<double> closeness_mean_distance(const YearGraph& g, int i) {
  return closeness_mean_distance(g, i, shortest_paths(g));
}
inline std::optional<double> closeness_mean_distance(const YearGraph& g, const CountryCode& v) {
  return closeness_mean_distance(g, g.index_of(v));
}

inline std::optional<double> closeness_normalized(const YearGraph& g, int i,
                                                  const DistanceMatrix& dm) {
  auto c = closeness_reciprocal(g, i, dm);
  if (!c) return std::nullopt;
  return *c / (g.size() - 1);
}

inline std::optional<double> closeness_normalized(const YearGraph& g, int i) {
  return closeness_normalized(g, i, shortest_paths(g));
}
inline std::optional<double> closeness_normalized(const YearGraph& g, const CountryCode& v) {
  return closeness_normalized(g, g.index_of(v));
}

inline double closeness_centralization(const YearGraph& g) {
  const int n = g.size();
  if (n < 3) throw ValidationError("closeness centralization undefined for graphs with < 3 nodes");
  DistanceMatrix dm = shortest_paths(g);
  std::vector<double> c(static_cast<std::size_t>(n));
  std::string offenders;
  for (int i = 0; i < n; ++i) {
    auto ci = closeness_reciprocal(g, i, dm);
    if (!ci) {
      if (!offenders.empty()) offenders += ", ";
      offenders += g.node(i).str();
      continue;
    }
    c[static_cast<std::size_t>(i)] = *ci;
  }
  if (!offenders.empty())
    throw ValidationError("closeness undefined for: " + offenders);
  double cmax = *std::max_element(c.begin(), c.end());
  double sum = 0.0;
  for (double ci : c) sum += cmax - ci;
  // Freeman maximum for closeness on n nodes: (n-1)(n-2)/(2n-3).
  double freeman_max = static_cast<double>(n - 1) * (n - 2) / (2.0 * n - 3.0);
  return sum / freeman_max;
}

inline std::optional<int> eccentricity(const YearGraph& g, int i, const DistanceMatrix& dm) {
  int furthest = 0;
  bool any = false;
  for (int j = 0; j < g.size(); ++j) {
    if (j == i || !dm.reachable(i, j)) continue;
    furthest = std::max(furthest, dm.at(i, j));
    any = true;
  }
  if (!any) return std::nullopt;
  return furthest;
}

inline std::optional<int> eccentricity(const YearGraph& g, int i) {
  return eccentricity(g, i, shortest_paths(g));
}
inline std::optional<int> eccentricity(const YearGraph& g, const CountryCode& v) {
  return eccentricity(g, g.index_of(v));
}

// ---------------------------------------------------------------------------
// Betweenness (N9): directed, unweighted, unnormalized pair dependencies,
// via Brandes' accumulation over the BFS shortest-path DAG.
// ---------------------------------------------------------------------------

inline std::vector<double> betweenness_all(const YearGraph& g) {
  const int n = g.size();
  std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
  std::vector<int> order;
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  std::deque<int> queue;

  for (int s = 0; s < n; ++s) {
    order.clear();
    for (int i = 0; i < n; ++i) {
      preds[static_cast<std::size_t>(i)].clear();
      sigma[static_cast<std::size_t>(i)] = 0.0;
      dist[static_cast<std::size_t>(i)] = -1;
      delta[static_cast<std::size_t>(i)] = 0.0;
    }
    sigma[static_cast<std::size_t>(s)] = 1.0;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (const auto& [v, w] : g.out_edges(u)) {
        auto vi = static_cast<std::size_t>(v);
        if (dist[vi] < 0) {
          dist[vi] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
        if (dist[vi] == dist[static_cast<std::size_t>(u)] + 1) {
          sigma[vi] += sigma[static_cast<std::size_t>(u)];
          preds[vi].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      auto wi = static_cast<std::size_t>(w);
      for (int u : preds[wi]) {
        auto ui = static_cast<std::size_t>(u);
        delta[ui] += sigma[ui] / sigma[wi] * (1.0 + delta[wi]);
      }
      if (w != s) bc[wi] += delta[wi];
    }
  }
  return bc;
}

inline double betweenness(const YearGraph& g, int i) {
  return betweenness_all(g)[static_cast<std::size_t>(i)];
}
inline double betweenness(const YearGraph& g, const CountryCode& v) {
  return betweenness(g, g.index_of(v));
}

// ---------------------------------------------------------------------------
// Clustering family, all on the undirected projection.
// ---------------------------------------------------------------------------

inline double local_clustering(const YearGraph& g, int i) {
  std::vector<int> nbrs = g.undirected_neighbors(i);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::size_t linked_pairs = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.linked(nbrs[a], nbrs[b])) ++linked_pairs;
  return static_cast<double>(linked_pairs) / (static_cast<double>(k) * (k - 1) / 2.0);
}

inline double local_clustering(const YearGraph& g, const CountryCode& v) {
  return local_clustering(g, g.index_of(v));
}

inline double average_clustering(const YearGraph& g) {
  if (g.size() == 0) throw ValidationError("average clustering undefined for the empty graph");
  double sum = 0.0;
  for (int i = 0; i < g.size(); ++i) sum += local_clustering(g, i);
  return sum / g.size();
}

// Triangle density: 3 * triangles / connected triples.
inline std::optional<double> global_clustering_triangles(const YearGraph& g) {
  const int n = g.size();
  long long triangles = 0;
  long long triples = 0;
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nbrs[static_cast<std::size_t>(i)] = g.undirected_neighbors(i);
  for (int i = 0; i < n; ++i) {
    long long k = static_cast<long long>(nbrs[static_cast<std::size_t>(i)].size());
    triples += k * (k - 1) / 2;
  }
  for (int i = 0; i < n; ++i) {
    const auto& ni = nbrs[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < ni.size(); ++a)
      for (std::size_t b = a + 1; b < ni.size(); ++b)
        if (ni[a] > i && ni[b] > i && g.linked(ni[a], ni[b])) ++triangles;
  }
  if (triples == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

// Configuration-model expectation (1/n) * [<k^2> - <k>]^2 / <k>^3 on the
// projected degree sequence. A comparison baseline; never feeds N10.
inline double random_expected_clustering(const YearGraph& g) {
  const int n = g.size();
  if (n == 0) throw ValidationError("expected clustering undefined for the empty graph");
  double k1 = 0.0, k2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double k = static_cast<double>(g.undirected_neighbors(i).size());
    k1 += k;
    k2 += k * k;
  }
  k1 /= n;
  k2 /= n;
  if (k1 == 0.0) throw ValidationError("expected clustering undefined: no edges");
  double num = k2 - k1;
  return (num * num) / (k1 * k1 * k1) / n;
}

// ---------------------------------------------------------------------------
// Indicator assembly
// ---------------------------------------------------------------------------

/// The N1-N11 vector for one node in one year. Unreachable-node quantities
/// (N7, N8) stay empty; they are reported as missing, never as zero.
struct NodeIndicators {
  CountryCode country;
  int year = 0;
  int in_degree = 0;                    // N1
  int out_degree = 0;                   // N2
  int degree = 0;                       // N3
  double weighted_degree = 0.0;         // N4
  double weighted_in = 0.0;             // N5
  double weighted_out = 0.0;            // N6
  std::optional<int> eccentricity;      // N7
  std::optional<double> closeness;      // N8, mean-distance form
  double betweenness = 0.0;             // N9
  double clustering = 0.0;              // N10
  double strength = 0.0;                // N11, identical to N4

  std::optional<double> value(int n_code) const {
    switch (n_code) {
      case 1: return static_cast<double>(in_degree);
      case 2: return static_cast<double>(out_degree);
      case 3: return static_cast<double>(degree);
      case 4: return weighted_degree;
      case 5: return weighted_in;
      case 6: return weighted_out;
      case 7:
        if (!eccentricity) return std::nullopt;
        return static_cast<double>(*eccentricity);
      case 8: return closeness;
      case 9: return betweenness;
      case 10: return clustering;
      case 11: return strength;
    }
    throw ValidationError("no such network indicator N" + std::to_string(n_code));
  }
};

/// All nodes of one graph in node order; shares one distance matrix and one
/// betweenness pass.
inline std::vector<NodeIndicators> node_indicators_all(const YearGraph& g) {
  const int n = g.size();
  DistanceMatrix dm = shortest_paths(g);
  std::vector<double> bc = betweenness_all(g);
  std::vector<NodeIndicators> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    NodeIndicators ni;
    ni.country = g.node(i);
    ni.year = g.year();
    ni.in_degree = g.in_degree(i);
    ni.out_degree = g.out_degree(i);
    ni.degree = g.degree(i);
    ni.weighted_in = g.weighted_in_degree(i);
    ni.weighted_out = g.weighted_out_degree(i);
    ni.weighted_degree = g.weighted_degree(i);
    ni.strength = ni.weighted_degree;
    ni.eccentricity = eccentricity(g, i, dm);
    ni.closeness = closeness_mean_distance(g, i, dm);
    ni.betweenness = bc[static_cast<std::size_t>(i)];
    ni.clustering = local_clustering(g, i);
    rows.push_back(std::move(ni));
  }
  return rows;
}

inline NodeIndicators node_indicator_vector(const YearGraph& g, const CountryCode& v) {
  int i = g.index_of(v);
  return node_indicators_all(g)[static_cast<std::size_t>(i)];
}

/// Graph-level roll-up. Quantities whose preconditions fail are left empty
/// instead of aborting the summary.
struct GraphSummary {
  int year = 0;
  int node_count = 0;
  std::optional<double> degree_centralization;
  std::optional<double> closeness_centralization;
  std::optional<double> global_clustering;
  std::optional<double> average_clustering;
  std::optional<double> random_expected_clustering;
};

inline GraphSummary graph_summary(const YearGraph& g) {
  GraphSummary s;
  s.year = g.year();
  s.node_count = g.size();
  try {
    s.degree_centralization = degree_centralization(g);
  } catch (const ValidationError&) {}
  try {
    s.closeness_centralization = closeness_centralization(g);
  } catch (const ValidationError&) {}
  s.global_clustering = global_clustering_triangles(g);
  try {
    s.average_clustering = average_clustering(g);
  } catch (const ValidationError&) {}
  try {
    s.random_expected_clustering = random_expected_clustering(g);
  } catch (const ValidationError&) {}
  return s;
}

}  // namespace netlab
