#include <htg/core.hpp>

#include <algorithm>

namespace htg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Multigraph: return "Multigraph";
    case ErrorKind::BadEll: return "BadEll";
    case ErrorKind::BadGcd: return "BadGcd";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::MismatchedFactor: return "MismatchedFactor";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::NoFlatEdges: return "NoFlatEdges";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InternalVerificationFailed: return "InternalVerificationFailed";
  }
  return "UnknownError";
}

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Vertical: return "vertical";
    case EdgeKind::Flat: return "flat";
    case EdgeKind::Jump: return "jump";
  }
  return "?";
}

std::string format_params(const HtgParams& p) {
  return "HTG(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," +
         std::to_string(p.ell) + ")";
}

std::string format_vertex(Vertex v) {
  return "u_{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}";
}

HtgParams validate(int m, int n, int ell) {
  if (m < 1) fail(ErrorKind::OutOfRange, "m must be positive, got " + std::to_string(m));
  if (n < 4 || n % 2 != 0)
    fail(ErrorKind::BadN, "n must be even and at least 4, got " + std::to_string(n));
  if (ell < 0 || ell > n - 1)
    fail(ErrorKind::OutOfRange,
         "ell must lie in [0, n-1], got " + std::to_string(ell) + " for n = " + std::to_string(n));
  if ((m - ell) % 2 != 0)
    fail(ErrorKind::BadParity, "m - ell must be even, got m = " + std::to_string(m) +
                                   ", ell = " + std::to_string(ell));
  if (m == 1 && (ell == 1 || ell == n - 1))
    fail(ErrorKind::Multigraph, format_params({m, n, ell}) + " is a multigraph");
  return HtgParams{m, n, ell};
}

HtgParams canonicalize(HtgParams params) {
  params.ell = std::min(params.ell, params.n - params.ell);
  return params;
}

std::optional<EdgeKind> HtgGraph::edge_kind(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return std::nullopt;
  int ib = index(b);
  for (const auto& [nbr, kind] : adjacency[index(a)]) {
    if (nbr == ib) return kind;
  }
  return std::nullopt;
}

HtgGraph build_graph(const HtgParams& params) {
  const int m = params.m, n = params.n, ell = params.ell;
  HtgGraph g;
  g.params = params;

  auto add = [&](Vertex a, Vertex b, EdgeKind kind) {
    if (g.index(a) > g.index(b)) std::swap(a, b);
    g.edges.push_back(Edge{a, b, kind});
  };

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) add({i, j}, {i, mod(j + 1, n)}, EdgeKind::Vertical);

  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) % 2 == 1) add({i, j}, {i + 1, j}, EdgeKind::Flat);

  for (int j = 0; j < n; ++j)
    if (j % 2 == mod(m, 2)) add({m - 1, j}, {0, mod(j + ell, n)}, EdgeKind::Jump);

  std::sort(g.edges.begin(), g.edges.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(g.index(x.a), g.index(x.b)) < std::pair(g.index(y.a), g.index(y.b));
  });
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  g.adjacency.assign(g.order(), {});
  std::vector<int> degree(g.order(), 0);
  for (const Edge& e : g.edges) {
    int ia = g.index(e.a), ib = g.index(e.b);
    if (ia == ib)
      fail(ErrorKind::InternalVerificationFailed, "self-loop produced for " + format_params(params));
    if (degree[ia] >= 3 || degree[ib] >= 3)
      fail(ErrorKind::InternalVerificationFailed,
           "valency above 3 produced for " + format_params(params));
    g.adjacency[ia][degree[ia]++] = {ib, e.kind};
    g.adjacency[ib][degree[ib]++] = {ia, e.kind};
  }
  for (int v = 0; v < g.order(); ++v) {
    if (degree[v] != 3)
      fail(ErrorKind::InternalVerificationFailed,
           "vertex of valency " + std::to_string(degree[v]) + " in " + format_params(params));
    std::sort(g.adjacency[v].begin(), g.adjacency[v].end());
  }
  return g;
}

}  // namespace htg
