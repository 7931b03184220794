#pragma once

#include <string>
#include <string_view>

#include "netlab/csv.hpp"
#include "netlab/graph.hpp"

namespace netlab {

enum class GraphFormat { Gexf, Dot };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "gexf") return GraphFormat::Gexf;
  if (name == "dot") return GraphFormat::Dot;
  throw ValidationError("unknown format '" + std::string(name) + "'; expected gexf|dot");
}

/// DOT digraph; nodes and edges in canonical order, so identical graphs yield
/// identical bytes.
inline std::string export_dot(const YearGraph& g) {
  std::string out = "digraph year_" + std::to_string(g.year()) + " {\n";
  for (const auto& node : g.nodes()) out += "  \"" + node.str() + "\";\n";
  g.for_each_edge([&](int i, int j, double w) {
    out += "  \"" + g.node(i).str() + "\" -> \"" + g.node(j).str() +
           "\" [weight=" + csv::format_double(w) + "];\n";
  });
  out += "}\n";
  return out;
}

/// GEXF 1.2 static directed graph with the native edge weight attribute.
inline std::string export_gexf(const YearGraph& g) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n";
  out += "  <meta><description>investment network, year " + std::to_string(g.year()) +
         "</description></meta>\n";
  out += "  <graph mode=\"static\" defaultedgetype=\"directed\">\n";
  out += "    <nodes>\n";
  for (const auto& node : g.nodes())
    out += "      <node id=\"" + node.str() + "\" label=\"" + node.str() + "\" />\n";
  out += "    </nodes>\n";
  out += "    <edges>\n";
  std::size_t edge_id = 0;
  g.for_each_edge([&](int i, int j, double w) {
    out += "      <edge id=\"" + std::to_string(edge_id++) + "\" source=\"" + g.node(i).str() +
           "\" target=\"" + g.node(j).str() + "\" weight=\"" + csv::format_double(w) + "\" />\n";
  });
  out += "    </edges>\n";
  out += "  </graph>\n";
  out += "</gexf>\n";
  return out;
}

inline std::string export_graph(const YearGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Gexf: return export_gexf(g);
    case GraphFormat::Dot: return export_dot(g);
  }
  throw ValidationError("unknown graph format");
}

}  // namespace netlab
