#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gncg/graph.hpp"
#include "gncg/group.hpp"

namespace gncg {

/// DOT serialization. Deterministic: vertices in element-index order, edges
/// sorted by (i, j). The leading comment records group descriptor, subgroup
/// generators and g so a figure can be regenerated from the file alone.
inline std::string to_dot(const GroupTable& gt, const UGraph& g, const std::string& group_desc,
                          const std::vector<Elem>& h_generators, Elem g_element) {
  std::ostringstream os;
  os << "graph delta {\n";
  os << "  // group=" << group_desc << " H=gen:";
  for (std::size_t i = 0; i < h_generators.size(); ++i) {
    if (i) os << ",";
    os << gt.name(h_generators[i]);
  }
  os << " g=" << gt.name(g_element) << "\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    os << "  \"" << gt.name(g.labels()[static_cast<std::size_t>(i)]) << "\";\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.edge(i, j))
        os << "  \"" << gt.name(g.labels()[static_cast<std::size_t>(i)]) << "\" -- \""
           << gt.name(g.labels()[static_cast<std::size_t>(j)]) << "\";\n";
  os << "}\n";
  return os.str();
}

struct DotCounts {
  int vertices = 0;
  int edges = 0;
};

/// Re-parse vertex/edge counts from DOT text produced by to_dot.
inline DotCounts parse_dot_counts(const std::string& dot) {
  DotCounts c;
  std::istringstream is(dot);
  std::string line;
  while (std::getline(is, line)) {
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::string_view body(line.data() + start, line.size() - start);
    if (body.empty() || body[0] != '"') continue;
    if (body.find(" -- ") != std::string_view::npos)
      ++c.edges;
    else
      ++c.vertices;
  }
  return c;
}

}  // namespace gncg
