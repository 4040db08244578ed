#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include <htg/constructions.hpp>
#include <htg/symmetry.hpp>

using namespace htg;

namespace {

std::vector<HtgParams> sweep(int max_order) {
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

TEST_CASE("rho rotates levels by two") {
  HtgParams p = validate(1, 12, 3);
  CHECK(apply_rho(p, {0, 0}, 1) == Vertex{0, 2});
  CHECK(apply_rho(p, {0, 0}, p.n / 2) == Vertex{0, 0});
  CHECK(apply_rho(p, {0, 0}, -1) == Vertex{0, 10});
}

TEST_CASE("pi steps diagonally with the wrap rule") {
  HtgParams p = validate(3, 12, 3);
  CHECK(apply_pi(p, {2, 0}, 1) == Vertex{0, 4});
  CHECK(apply_pi(p, {0, 5}, 0) == Vertex{0, 5});
  for (const HtgParams& q : sweep(80)) {
    for (int i = 0; i < q.m; ++i)
      for (int j = 0; j < q.n; ++j) {
        Vertex v{i, j};
        CHECK(apply_pi(q, v, q.m) == Vertex{i, mod(j + q.m + q.ell, q.n)});
        CHECK(apply_pi(q, apply_pi(q, v, 1), -1) == v);
      }
  }
}

TEST_CASE("pi^m equals rho^{(m+ell)/2}") {
  for (const HtgParams& p : sweep(100))
    for (int i = 0; i < p.m; ++i)
      for (int j = 0; j < p.n; ++j) {
        Vertex v{i, j};
        CHECK(apply_pi(p, v, p.m) == apply_rho(p, v, (p.m + p.ell) / 2));
      }
}

TEST_CASE("generators map edges to edges") {
  for (const HtgParams& p : sweep(200)) {
    HtgGraph g = build_graph(p);
    for (const Edge& e : g.edges) {
      CHECK(g.has_edge(apply_rho(p, e.a, 1), apply_rho(p, e.b, 1)));
      CHECK(g.has_edge(apply_pi(p, e.a, 1), apply_pi(p, e.b, 1)));
    }
  }
}

TEST_CASE("group elements compose, invert, and act consistently") {
  for (const HtgParams& p : sweep(60)) {
    for (const GroupElement& g1 : group_elements(p)) {
      CHECK(compose(p, g1, inverse(p, g1)) == identity());
      Vertex v{p.m - 1, p.n - 1};
      CHECK(apply(p, identity(), v) == v);
      for (const GroupElement& g2 : group_elements(p)) {
        Vertex lhs = apply(p, g1, apply(p, g2, v));
        Vertex rhs = apply(p, compose(p, g1, g2), v);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("transporter: algebraic result matches exhaustive search") {
  CHECK(transporter(validate(1, 12, 3), {0, 2}, {0, 2}) == identity());
  CHECK(transporter(validate(1, 12, 3), {0, 2}, {0, 0}) == GroupElement{5, 0});  // rho^{-1}

  for (const HtgParams& p : sweep(40)) {
    for (int a = 0; a < p.m * p.n; ++a)
      for (int b = 0; b < p.m * p.n; ++b) {
        Vertex x{a / p.n, a % p.n}, y{b / p.n, b % p.n};
        auto t = transporter(p, x, y);
        std::vector<GroupElement> hits;
        for (const GroupElement& g : group_elements(p))
          if (apply(p, g, x) == y) hits.push_back(g);
        if ((x.i + x.j) % 2 != (y.i + y.j) % 2) {
          CHECK(!t.has_value());
          CHECK(hits.empty());
        } else {
          REQUIRE(t.has_value());
          REQUIRE(hits.size() == 1);  // regular action on each orbit
          CHECK(hits[0] == *t);
        }
      }
  }
}

TEST_CASE("columns form a block system") {
  for (const HtgParams& p : sweep(100)) {
    for (const GroupElement& g : group_elements(p)) {
      for (int i = 0; i < p.m; ++i) {
        std::set<int> image_columns;
        for (int j = 0; j < p.n; ++j) image_columns.insert(apply(p, g, {i, j}).i);
        CHECK(image_columns.size() == 1);
      }
    }
  }
}

TEST_CASE("apply_to_factor preserves structure and shifts separation") {
  HtgParams p = validate(1, 12, 3);
  HtgGraph g = build_graph(p);
  SeparationCertificate base = build_O3(12, {0, 0}, {0, 5});
  const TwoFactor& f = base.factor;

  TwoFactor same = apply_to_factor(g, identity(), f);
  CHECK(same.edges.size() == f.edges.size());
  for (size_t e = 0; e < f.edges.size(); ++e) CHECK(same.edges[e] == f.edges[e]);

  TwoFactor shifted = apply_to_factor(g, GroupElement{1, 0}, f);
  auto lengths = f.cycle_lengths();
  auto shifted_lengths = shifted.cycle_lengths();
  std::sort(lengths.begin(), lengths.end());
  std::sort(shifted_lengths.begin(), shifted_lengths.end());
  CHECK(lengths == shifted_lengths);
  for (int j = 1; j <= 8; ++j) {
    bool before = separates(f, {0, 0}, {0, j});
    bool after = separates(shifted, {0, 2}, {0, mod(j + 2, 12)});
    CHECK(before == after);
  }
}

TEST_CASE("the inverse of rho*pi applied to the three-column factor separates u00 and u01") {
  HtgParams p = validate(3, 12, 3);
  HtgGraph g = build_graph(p);
  FactorFamily fam = builder_family(p, TheoremId::L3);
  REQUIRE(!fam.factors.empty());
  const TwoFactor& f = fam.factors.front();
  GroupElement rho_pi = compose(p, GroupElement{1, 0}, GroupElement{0, 1});
  TwoFactor image = apply_to_factor(g, inverse(p, rho_pi), f);
  CHECK(separates(image, {0, 0}, {0, 1}));
}
