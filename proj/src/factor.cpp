#include <htg/factor.hpp>

#include <algorithm>

namespace htg {

std::vector<int> TwoFactor::cycle_lengths() const {
  std::vector<int> lengths;
  lengths.reserve(cycles.size());
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  return lengths;
}

bool TwoFactor::uses(const HtgGraph& g, Vertex a, Vertex b) const {
  int ia = g.index(a), ib = g.index(b);
  if (ia > ib) std::swap(ia, ib);
  for (const Edge& e : edges)
    if (g.index(e.a) == ia && g.index(e.b) == ib) return true;
  return false;
}

namespace {

// Canonical decomposition: traverse each cycle from its minimum vertex toward
// the smaller of its two neighbors.
void decompose_cycles(const HtgGraph& g, TwoFactor& f) {
  const int order = g.order();
  std::vector<std::array<int, 2>> nbr(order, {-1, -1});
  for (const Edge& e : f.edges) {
    int ia = g.index(e.a), ib = g.index(e.b);
    auto attach = [&](int v, int w) {
      if (nbr[v][0] < 0) {
        nbr[v][0] = w;
      } else {
        nbr[v][1] = w;
        if (nbr[v][0] > nbr[v][1]) std::swap(nbr[v][0], nbr[v][1]);
      }
    };
    attach(ia, ib);
    attach(ib, ia);
  }

  f.cycles.clear();
  f.cycle_of.assign(order, -1);
  for (int start = 0; start < order; ++start) {
    if (f.cycle_of[start] >= 0) continue;
    int id = static_cast<int>(f.cycles.size());
    std::vector<int> cycle;
    int prev = start, cur = nbr[start][0];
    cycle.push_back(start);
    f.cycle_of[start] = id;
    while (cur != start) {
      cycle.push_back(cur);
      f.cycle_of[cur] = id;
      int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    f.cycles.push_back(std::move(cycle));
  }
}

}  // namespace

TwoFactor verify_factor(const HtgGraph& graph, const std::vector<Edge>& edges) {
  TwoFactor f;
  f.params = graph.params;
  f.edges.reserve(edges.size());

  for (const Edge& e : edges) {
    auto kind = graph.edge_kind(e.a, e.b);
    if (!kind)
      fail(ErrorKind::MismatchedFactor, "edge [" + format_vertex(e.a) + "," + format_vertex(e.b) +
                                            "] is not an edge of " + format_params(graph.params));
    Vertex a = e.a, b = e.b;
    if (graph.index(a) > graph.index(b)) std::swap(a, b);
    f.edges.push_back(Edge{a, b, *kind});
  }
  std::sort(f.edges.begin(), f.edges.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(graph.index(x.a), graph.index(x.b)) <
           std::pair(graph.index(y.a), graph.index(y.b));
  });
  f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());

  std::vector<int> degree(graph.order(), 0);
  for (const Edge& e : f.edges) {
    ++degree[graph.index(e.a)];
    ++degree[graph.index(e.b)];
  }
  for (int v = 0; v < graph.order(); ++v) {
    if (degree[v] != 2)
      fail(ErrorKind::NotSpanning, format_vertex(graph.vertex(v)) + " has chosen valency " +
                                       std::to_string(degree[v]) + ", expected 2");
  }

  decompose_cycles(graph, f);
  return f;
}

TwoFactor verify_factor(const HtgGraph& graph,
                        const std::vector<std::pair<Vertex, Vertex>>& endpoints) {
  std::vector<Edge> edges;
  edges.reserve(endpoints.size());
  for (const auto& [a, b] : endpoints) edges.push_back(Edge{a, b, EdgeKind::Vertical});
  return verify_factor(graph, edges);
}

bool separates(const TwoFactor& factor, Vertex x, Vertex y) {
  if (x == y) fail(ErrorKind::SameVertex, "separation requires two distinct vertices");
  if (factor.cycle_count() != 2) return false;
  int n = factor.params.n;
  return factor.cycle_of[x.i * n + x.j] != factor.cycle_of[y.i * n + y.j];
}

SeparationCertificate make_certificate(const HtgGraph& graph, TwoFactor factor, Vertex x,
                                       Vertex y, std::string provenance) {
  if (!separates(factor, x, y))
    fail(ErrorKind::InternalVerificationFailed,
         "constructed factor does not separate " + format_vertex(x) + " and " + format_vertex(y) +
             " on " + format_params(graph.params) + " (" + provenance + ")");
  return SeparationCertificate{graph.params, {x, y}, std::move(factor), std::move(provenance)};
}

}  // namespace htg
