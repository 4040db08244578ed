#include <doctest.h>

#include <algorithm>
#include <set>

#include <htg/core.hpp>
#include <htg/dot.hpp>
#include <htg/factor.hpp>

using namespace htg;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Unsupported;
}

std::vector<HtgParams> small_params(int max_order) {
  std::vector<HtgParams> out;
  for (int m = 1; m * 4 <= max_order; ++m)
    for (int n = 4; m * n <= max_order; n += 2)
      for (int ell = 0; ell < n; ++ell) {
        if ((m - ell) % 2 != 0) continue;
        if (m == 1 && (ell == 1 || ell == n - 1)) continue;
        out.push_back(HtgParams{m, n, ell});
      }
  return out;
}

}  // namespace

TEST_CASE("validate accepts and rejects per the definition") {
  CHECK(validate(1, 12, 3) == HtgParams{1, 12, 3});
  CHECK(kind_of([] { validate(1, 8, 1); }) == ErrorKind::Multigraph);
  CHECK(kind_of([] { validate(1, 8, 7); }) == ErrorKind::Multigraph);
  CHECK(kind_of([] { validate(2, 6, 3); }) == ErrorKind::BadParity);
  CHECK(kind_of([] { validate(2, 5, 0); }) == ErrorKind::BadN);
  CHECK(kind_of([] { validate(2, 2, 0); }) == ErrorKind::BadN);
  CHECK(kind_of([] { validate(2, 6, 6); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { validate(0, 6, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("canonicalize folds ell onto min(ell, n-ell)") {
  CHECK(canonicalize(validate(1, 12, 9)) == HtgParams{1, 12, 3});
  CHECK(canonicalize(validate(2, 10, 4)) == HtgParams{2, 10, 4});
  CHECK(canonicalize(validate(1, 10, 5)) == HtgParams{1, 10, 5});
  for (const HtgParams& p : small_params(60))
    CHECK(canonicalize(canonicalize(p)) == canonicalize(p));
}

TEST_CASE("HTG(1,12,3): 12 vertices, 18 edges, jump set {v_j v_{j+3} : j odd}") {
  HtgGraph g = build_graph(validate(1, 12, 3));
  CHECK(g.order() == 12);
  CHECK(g.size() == 18);
  std::set<std::pair<int, int>> jumps;
  for (const Edge& e : g.edges)
    if (e.kind == EdgeKind::Jump) jumps.emplace(g.index(e.a), g.index(e.b));
  std::set<std::pair<int, int>> expected;
  for (int j = 1; j < 12; j += 2) {
    int a = j, b = (j + 3) % 12;
    expected.emplace(std::min(a, b), std::max(a, b));
  }
  CHECK(jumps == expected);
}

TEST_CASE("HTG(2,4,0): flat rungs at odd levels, jump rungs at even levels") {
  HtgGraph g = build_graph(validate(2, 4, 0));
  CHECK(g.order() == 8);
  for (int j = 0; j < 4; ++j) {
    auto kind = g.edge_kind({0, j}, {1, j});
    REQUIRE(kind.has_value());
    CHECK(*kind == (j % 2 == 1 ? EdgeKind::Flat : EdgeKind::Jump));
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) CHECK(g.edge_kind({i, j}, {i, (j + 1) % 4}) == EdgeKind::Vertical);
}

TEST_CASE("HTG(3,12,3): 36 vertices, 54 edges, every valency 3") {
  HtgGraph g = build_graph(validate(3, 12, 3));
  CHECK(g.order() == 36);
  CHECK(g.size() == 54);
  // adjacency rows always hold exactly three neighbors by construction
  for (int v = 0; v < g.order(); ++v) {
    std::set<int> nbrs;
    for (const auto& [w, kind] : g.adjacency[v]) nbrs.insert(w);
    CHECK(nbrs.size() == 3);
  }
}

TEST_CASE("edge counts and kind partition across small parameters") {
  for (const HtgParams& p : small_params(120)) {
    HtgGraph g = build_graph(p);
    int mn = p.m * p.n;
    CHECK(g.size() == 3 * mn / 2);
    int vertical = 0, flat = 0, jump = 0, nonvertical_per_vertex_ok = 0;
    for (const Edge& e : g.edges) {
      if (e.kind == EdgeKind::Vertical) ++vertical;
      if (e.kind == EdgeKind::Flat) ++flat;
      if (e.kind == EdgeKind::Jump) ++jump;
    }
    CHECK(vertical == mn);
    CHECK(flat + jump == mn / 2);
    for (int v = 0; v < g.order(); ++v) {
      int nonvertical = 0;
      for (const auto& [w, kind] : g.adjacency[v])
        if (kind != EdgeKind::Vertical) ++nonvertical;
      if (nonvertical == 1) ++nonvertical_per_vertex_ok;
    }
    CHECK(nonvertical_per_vertex_ok == g.order());
  }
}

TEST_CASE("build_graph is deterministic") {
  HtgGraph a = build_graph(validate(3, 10, 1));
  HtgGraph b = build_graph(validate(3, 10, 1));
  REQUIRE(a.size() == b.size());
  for (int e = 0; e < a.size(); ++e) {
    CHECK(a.edges[e].a == b.edges[e].a);
    CHECK(a.edges[e].b == b.edges[e].b);
    CHECK(a.edges[e].kind == b.edges[e].kind);
  }
}

TEST_CASE("canonicalize yields an isomorphic graph (level negation)") {
  for (auto [m, n, ell] : {std::tuple{1, 12, 9}, {2, 10, 6}, {3, 8, 5}, {4, 6, 4}}) {
    HtgParams p = validate(m, n, ell);
    HtgGraph g = build_graph(p);
    HtgGraph h = build_graph(canonicalize(p));
    auto mirror = [&](Vertex v) { return Vertex{v.i, mod(-v.j, n)}; };
    int mapped = 0;
    for (const Edge& e : g.edges)
      if (h.has_edge(mirror(e.a), mirror(e.b))) ++mapped;
    if (p == canonicalize(p)) continue;
    CHECK(mapped == g.size());
  }
}

TEST_CASE("export_dot renders deterministically, with and without a factor") {
  HtgGraph g = build_graph(validate(1, 12, 3));
  std::string plain = export_dot(g);
  CHECK(plain == export_dot(g));
  CHECK(std::count(plain.begin(), plain.end(), '\n') > 12 + 18);  // nodes + edges + wrapper
  CHECK(plain.find("penwidth") == std::string::npos);

  // two column cycles of HTG(2,6,0) as highlight: both styles appear
  HtgGraph h = build_graph(validate(2, 6, 0));
  std::vector<std::pair<Vertex, Vertex>> cols;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j) cols.emplace_back(Vertex{i, j}, Vertex{i, (j + 1) % 6});
  TwoFactor f = verify_factor(h, cols);
  std::string highlighted = export_dot(h, &f);
  CHECK(highlighted.find("penwidth") != std::string::npos);
  CHECK(highlighted.find("dashed") != std::string::npos);

  // factor from another graph is rejected
  CHECK(kind_of([&] { export_dot(g, &f); }) == ErrorKind::MismatchedFactor);
}
