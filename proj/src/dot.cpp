#include <htg/dot.hpp>

#include <set>
#include <sstream>

namespace htg {

std::string export_dot(const HtgGraph& graph, const TwoFactor* highlight) {
  std::set<std::pair<int, int>> chosen;
  if (highlight) {
    if (highlight->params != graph.params)
      fail(ErrorKind::MismatchedFactor,
           "factor built for " + format_params(highlight->params) + ", graph is " +
               format_params(graph.params));
    for (const Edge& e : highlight->edges)
      chosen.emplace(graph.index(e.a), graph.index(e.b));
  }

  std::ostringstream out;
  out << "graph \"" << format_params(graph.params) << "\" {\n";
  out << "  layout=neato;\n  node [shape=circle, fontsize=10, width=0.35, fixedsize=true];\n";
  for (int i = 0; i < graph.params.m; ++i) {
    for (int j = 0; j < graph.params.n; ++j) {
      out << "  \"u" << i << "_" << j << "\" [label=\"" << i << "," << j << "\", pos=\""
          << i * 2 << "," << j << "!\"];\n";
    }
  }
  for (const Edge& e : graph.edges) {
    out << "  \"u" << e.a.i << "_" << e.a.j << "\" -- \"u" << e.b.i << "_" << e.b.j << "\"";
    bool in_factor = chosen.count({graph.index(e.a), graph.index(e.b)}) > 0;
    out << " [class=\"" << to_string(e.kind) << "\"";
    if (highlight) {
      if (in_factor)
        out << ", penwidth=2.4, color=black";
      else
        out << ", style=dashed, color=gray60";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace htg
