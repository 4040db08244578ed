#ifndef HTG_CORE_HPP
#define HTG_CORE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <htg/error.hpp>

namespace htg {

/// The triple (m, n, ell) of a honeycomb toroidal graph: m columns of n
/// vertices with jump offset ell.  Always produced through validate().
struct HtgParams {
  int m = 0;
  int n = 0;
  int ell = 0;

  friend auto operator<=>(const HtgParams&, const HtgParams&) = default;
};

/// Column/level coordinates u_{i,j}, 0 <= i < m, 0 <= j < n.
struct Vertex {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class EdgeKind : uint8_t { Vertical, Flat, Jump };

const char* to_string(EdgeKind kind);

/// Undirected edge stored with endpoints in canonical (flattened-index) order.
struct Edge {
  Vertex a;
  Vertex b;
  EdgeKind kind = EdgeKind::Vertical;

  friend bool operator==(const Edge& lhs, const Edge& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

/// Rejects parameters outside the definition: n even and >= 4, m and ell of
/// equal parity, ell in [0, n-1], and not the multigraph case m = 1 with
/// ell in {1, n-1}.
HtgParams validate(int m, int n, int ell);

/// Replaces ell by min(ell, n - ell); the two graphs are isomorphic under
/// level negation.  Idempotent.
HtgParams canonicalize(HtgParams params);

/// The constructed graph: 3-regular, simple, immutable after construction.
struct HtgGraph {
  HtgParams params;
  std::vector<Edge> edges;  // canonical endpoint order, sorted, no duplicates

  // adjacency[v] holds the three (neighbor index, kind) pairs sorted by
  // neighbor index
  std::vector<std::array<std::pair<int, EdgeKind>, 3>> adjacency;

  int order() const { return params.m * params.n; }
  int size() const { return static_cast<int>(edges.size()); }

  int index(Vertex v) const { return v.i * params.n + v.j; }
  Vertex vertex(int idx) const { return Vertex{idx / params.n, idx % params.n}; }
  bool contains(Vertex v) const {
    return v.i >= 0 && v.i < params.m && v.j >= 0 && v.j < params.n;
  }

  /// Kind of the edge {a, b} if present.
  std::optional<EdgeKind> edge_kind(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_kind(a, b).has_value(); }
};

/// Builds the exact edge set of HTG(m, n, ell): vertical edges within each
/// column, flat edges between adjacent columns where i + j is odd, and jump
/// edges from column m-1 to column 0 with offset ell where j = m (mod 2).
HtgGraph build_graph(const HtgParams& params);

std::string format_params(const HtgParams& params);
std::string format_vertex(Vertex v);

inline int mod(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Floor division (C++ truncates toward zero).
inline int floor_div(int value, int divisor) {
  int q = value / divisor;
  if ((value % divisor != 0) && ((value < 0) != (divisor < 0))) --q;
  return q;
}

}  // namespace htg

#endif
