#include <htg/constructions.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

#include <htg/symmetry.hpp>

namespace htg {

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

std::optional<Decomposition> decompose_even(long long alpha, int x, int y) {
  if (x <= 0 || y <= 0 || x % 2 != 0 || y % 2 != 0)
    fail(ErrorKind::BadGcd, "x and y must be positive even integers");
  if (std::gcd(x, y) != 2)
    fail(ErrorKind::BadGcd, "gcd(" + std::to_string(x) + "," + std::to_string(y) +
                                ") must be 2, got " + std::to_string(std::gcd(x, y)));
  if (alpha < 0 || alpha % 2 != 0) return std::nullopt;
  for (long long gamma = 0; gamma * y <= alpha; ++gamma) {
    if ((alpha - gamma * y) % x == 0)
      return Decomposition{alpha, (alpha - gamma * y) / x, gamma, x, y};
  }
  return std::nullopt;
}

int bound_odd(int ell) {
  if (ell <= 3 || ell % 2 == 0)
    fail(ErrorKind::BadEll, "bound_odd requires odd ell > 3, got " + std::to_string(ell));
  return (3 * ell * ell - 4 * ell - 3) / 2;
}

int bound_even(int ell) {
  if (ell <= 2 || ell % 2 != 0)
    fail(ErrorKind::BadEll, "bound_even requires even ell > 2, got " + std::to_string(ell));
  return (ell * ell + 2 * ell - 4) / 2;
}

// ---------------------------------------------------------------------------
// Small assembly helpers
// ---------------------------------------------------------------------------

namespace {

using Seq = std::vector<Vertex>;
using EndpointList = std::vector<std::pair<Vertex, Vertex>>;

void push(Seq& s, int n, int i, int j) { s.push_back(Vertex{i, mod(j, n)}); }

// A closed walk given as a vertex sequence with seq.front() == seq.back().
void append_cycle_edges(EndpointList& out, const Seq& seq) {
  for (size_t k = 0; k + 1 < seq.size(); ++k) out.emplace_back(seq[k], seq[k + 1]);
}

// Vertical edges along one column from level `from` to level `to`, stepping
// dir = +1 or -1 (mod n).
void column_run(EndpointList& out, int n, int col, int from, int to, int dir) {
  for (int j = mod(from, n); j != mod(to, n); j = mod(j + dir, n))
    out.emplace_back(Vertex{col, j}, Vertex{col, mod(j + dir, n)});
}

TwoFactor verified(const HtgGraph& g, const EndpointList& endpoints) {
  return verify_factor(g, endpoints);
}

// ---------------------------------------------------------------------------
// Deterministic complementary-cycle search: the lexicographically least
// single cycle through exactly the complement vertex set, smallest neighbor
// first.  Memoized per (params, vertex set).
// ---------------------------------------------------------------------------

struct CycleSearch {
  const HtgGraph& g;
  const std::vector<bool>& in_set;
  int want = 0;
  int start = -1;
  std::vector<bool> visited;
  std::vector<int> path;

  explicit CycleSearch(const HtgGraph& graph, const std::vector<bool>& set)
      : g(graph), in_set(set), visited(graph.order(), false) {
    for (int v = 0; v < g.order(); ++v)
      if (in_set[v]) {
        ++want;
        if (start < 0) start = v;
      }
  }

  // Every unvisited target must stay reachable from the path head and keep
  // at least two usable connections; otherwise the branch is dead.
  bool feasible(int head) const {
    std::vector<bool> seen(g.order(), false);
    std::queue<int> q;
    q.push(head);
    seen[head] = true;
    int reached = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& [w, kind] : g.adjacency[v]) {
        (void)kind;
        if (!in_set[w] || visited[w] || seen[w]) continue;
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
    if (reached != want - static_cast<int>(path.size())) return false;
    for (int v = 0; v < g.order(); ++v) {
      if (!in_set[v] || visited[v]) continue;
      int options = 0;
      for (const auto& [w, kind] : g.adjacency[v]) {
        (void)kind;
        if (in_set[w] && (!visited[w] || w == head || w == start)) ++options;
      }
      if (options < 2) return false;
    }
    return true;
  }

  bool dfs(int head) {
    if (static_cast<int>(path.size()) == want) return g.has_edge(g.vertex(head), g.vertex(start));
    if (!feasible(head)) return false;
    for (const auto& [w, kind] : g.adjacency[head]) {
      (void)kind;
      if (!in_set[w] || visited[w]) continue;
      visited[w] = true;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      visited[w] = false;
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    if (want < 3) return std::nullopt;
    visited[start] = true;
    path.push_back(start);
    if (dfs(start)) return path;
    return std::nullopt;
  }
};

std::optional<std::vector<int>> cycle_through(const HtgGraph& g, const std::vector<bool>& in_set) {
  static std::map<std::string, std::optional<std::vector<int>>> memo;
  static std::mutex memo_mutex;

  std::string key = format_params(g.params) + ":";
  for (int v = 0; v < g.order(); ++v) key += in_set[v] ? '1' : '0';
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  CycleSearch search(g, in_set);
  auto result = search.run();
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[key] = result;
  return result;
}

// Completes a partial factor: returns cycle edges through every vertex the
// given cycles miss, or nullopt.
std::optional<EndpointList> complementary_cycle_edges(const HtgGraph& g,
                                                      const EndpointList& used_edges) {
  std::vector<bool> missing(g.order(), true);
  for (const auto& [a, b] : used_edges) {
    missing[g.index(a)] = false;
    missing[g.index(b)] = false;
  }
  auto cycle = cycle_through(g, missing);
  if (!cycle) return std::nullopt;
  EndpointList out;
  for (size_t k = 0; k < cycle->size(); ++k)
    out.emplace_back(g.vertex((*cycle)[k]), g.vertex((*cycle)[(k + 1) % cycle->size()]));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Vertical fills
// ---------------------------------------------------------------------------

TwoFactor fill(const HtgGraph& host, const TwoFactor& factor, int left_column,
               FillDirection direction) {
  const int m = host.params.m, n = host.params.n;
  if (factor.params != host.params)
    fail(ErrorKind::MismatchedFactor, "factor does not belong to " + format_params(host.params));
  if (left_column < 0 || left_column + 1 >= m)
    fail(ErrorKind::OutOfRange, "no column pair (" + std::to_string(left_column) + "," +
                                    std::to_string(left_column + 1) + ") in " +
                                    format_params(host.params));

  const int c = left_column;
  std::vector<int> levels;
  for (const Edge& e : factor.edges)
    if (e.kind == EdgeKind::Flat && e.a.i == c && e.b.i == c + 1) levels.push_back(e.a.j);
  std::sort(levels.begin(), levels.end());
  if (levels.empty())
    fail(ErrorKind::NoFlatEdges, "factor uses no flat edge between columns " + std::to_string(c) +
                                     " and " + std::to_string(c + 1));

  HtgParams grown = validate(m + 2, n, host.params.ell);
  HtgGraph grown_graph = build_graph(grown);
  auto shifted = [&](Vertex v) { return Vertex{v.i > c ? v.i + 2 : v.i, v.j}; };
  const int a = c + 1, b = c + 2;
  const int k = static_cast<int>(levels.size());

  EndpointList out;
  for (const Edge& e : factor.edges) {
    if (e.kind == EdgeKind::Flat && e.a.i == c && e.b.i == c + 1) {
      int t = e.a.j;
      int pos = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), t) -
                                 levels.begin());
      out.emplace_back(Vertex{c, t}, Vertex{a, t});
      if (direction == FillDirection::Down) {
        int s = mod(levels[mod(pos - 1, k)] + 1, n);
        column_run(out, n, a, t, s, -1);
        out.emplace_back(Vertex{a, s}, Vertex{b, s});
        column_run(out, n, b, s, t, +1);
      } else {
        int s = mod(levels[mod(pos + 1, k)] - 1, n);
        column_run(out, n, a, t, s, +1);
        out.emplace_back(Vertex{a, s}, Vertex{b, s});
        column_run(out, n, b, s, t, -1);
      }
      out.emplace_back(Vertex{b, t}, Vertex{c + 3, t});
    } else {
      out.emplace_back(shifted(e.a), shifted(e.b));
    }
  }

  TwoFactor result = verified(grown_graph, out);
  if (result.cycle_count() != factor.cycle_count())
    fail(ErrorKind::InternalVerificationFailed,
         "fill changed the cycle count on " + format_params(grown));
  return result;
}

TwoFactor expand_1_to_3(const HtgGraph& host, const TwoFactor& factor, FillDirection direction) {
  const int n = host.params.n, ell = host.params.ell;
  if (host.params.m != 1)
    fail(ErrorKind::Unsupported, "expand_1_to_3 starts from one column, got " +
                                     format_params(host.params));
  if (factor.params != host.params)
    fail(ErrorKind::MismatchedFactor, "factor does not belong to " + format_params(host.params));

  // Generators of the used jumps: the odd endpoint of each jump edge.
  std::vector<int> gens;
  for (const Edge& e : factor.edges)
    if (e.kind == EdgeKind::Jump) gens.push_back(e.a.j % 2 == 1 ? e.a.j : e.b.j);
  std::sort(gens.begin(), gens.end());
  if (gens.empty())
    fail(ErrorKind::NoFlatEdges, "factor uses no jump edge, nothing to thread the new columns on");

  HtgParams grown = validate(3, n, ell);
  HtgGraph grown_graph = build_graph(grown);
  const int k = static_cast<int>(gens.size());

  EndpointList out;
  for (const Edge& e : factor.edges) {
    if (e.kind != EdgeKind::Jump) {
      out.emplace_back(e.a, e.b);
      continue;
    }
    int j = e.a.j % 2 == 1 ? e.a.j : e.b.j;
    int pos = static_cast<int>(std::lower_bound(gens.begin(), gens.end(), j) - gens.begin());
    out.emplace_back(Vertex{0, j}, Vertex{1, j});
    if (direction == FillDirection::Down) {
      int s = mod(gens[mod(pos - 1, k)] + 1, n);
      column_run(out, n, 1, j, s, -1);
      out.emplace_back(Vertex{1, s}, Vertex{2, s});
      column_run(out, n, 2, s, j, +1);
    } else {
      int s = mod(gens[mod(pos + 1, k)] - 1, n);
      column_run(out, n, 1, j, s, +1);
      out.emplace_back(Vertex{1, s}, Vertex{2, s});
      column_run(out, n, 2, s, j, -1);
    }
    out.emplace_back(Vertex{2, j}, Vertex{0, mod(j + ell, n)});
  }

  TwoFactor result = verified(grown_graph, out);
  if (result.cycle_count() != factor.cycle_count())
    fail(ErrorKind::InternalVerificationFailed, "expansion changed the cycle count");
  return result;
}

// ---------------------------------------------------------------------------
// Base factors, one per constructive family
// ---------------------------------------------------------------------------

namespace {

FillDirection flipped(FillDirection d) {
  return d == FillDirection::Down ? FillDirection::Up : FillDirection::Down;
}

// One-column host, jump offset 3: the 4-cycle through v_0 plus the growing
// cycle through v_1..v_{n-4}.
TwoFactor base_O3_main(const HtgGraph& g) {
  const int n = g.params.n;
  EndpointList out;
  Seq c1;
  for (int j : {0, n - 3, n - 2, n - 1, 0}) push(c1, n, 0, j);
  append_cycle_edges(out, c1);

  std::set<std::pair<int, int>> c2;
  auto key = [&](int u, int v) {
    u = mod(u, n);
    v = mod(v, n);
    return std::pair(std::min(u, v), std::max(u, v));
  };
  c2.insert(key(1, 2));
  c2.insert(key(2, 3));
  c2.insert(key(3, 4));
  c2.insert(key(4, 1));
  for (int t = 2; t <= (n - 6) / 2; ++t) {
    c2.erase(key(2 * t - 1, 2 * t));
    c2.insert(key(2 * t - 1, 2 * t + 2));
    c2.insert(key(2 * t + 2, 2 * t + 1));
    c2.insert(key(2 * t + 1, 2 * t));
  }
  for (const auto& [u, v] : c2) out.emplace_back(Vertex{0, u}, Vertex{0, v});
  return verified(g, out);
}

// The forced factor separating vertical neighbors across the wrap: two
// cycles alternating one vertical edge and one jump, offset classes
// {0,1 mod 4} and {2,3 mod 4}.  Needs n = 0 (mod 4).
TwoFactor base_O3_forced(const HtgGraph& g) {
  const int n = g.params.n;
  EndpointList out;
  for (int t = 0; t < n / 4; ++t) {
    out.emplace_back(Vertex{0, 4 * t}, Vertex{0, 4 * t + 1});
    out.emplace_back(Vertex{0, 4 * t + 1}, Vertex{0, mod(4 * t + 4, n)});
    out.emplace_back(Vertex{0, 4 * t + 2}, Vertex{0, 4 * t + 3});
    out.emplace_back(Vertex{0, 4 * t + 3}, Vertex{0, mod(4 * t + 6, n)});
  }
  return verified(g, out);
}

Seq alpha_c1_seq(int n, int ell) {
  Seq s;
  for (int j : {ell - 3, ell - 2, ell - 1, n - 1, n - 2, n - 3, ell - 3}) push(s, n, 0, j);
  return s;
}

// One-column factor for odd ell > 3 and representable alpha = n - 2*ell:
// the fixed 6-cycle plus one long cycle assembled from the seed path, the
// bridging jump, beta P-paths and gamma Q-paths.
TwoFactor base_alpha(const HtgGraph& g, const Decomposition& d) {
  const int n = g.params.n, ell = g.params.ell;
  EndpointList out;
  append_cycle_edges(out, alpha_c1_seq(n, ell));

  Seq s;
  for (int t = 0; t <= ell - 4; ++t) push(s, n, 0, n - 4 - t);  // n-4 .. n-ell
  for (int t = 0; t <= ell - 4; ++t) push(s, n, 0, t);          // 0 .. ell-4
  push(s, n, 0, 2 * ell - 4);                                   // bridging jump
  int x = 2 * ell - 4;
  for (long long p = 0; p < d.beta; ++p) {
    for (int t = 1; t <= ell - 4; ++t) push(s, n, 0, x - t);
    for (int j : {x + 4, x + 3, x + 2, x + 1, x + 1 + ell}) push(s, n, 0, j);
    x += ell + 1;
  }
  for (long long q = 0; q < d.gamma; ++q) {
    for (int t = 1; t <= ell - 4; ++t) push(s, n, 0, x - t);
    for (int t = 0; t <= ell - 3; ++t) push(s, n, 0, x + 4 + t);
    for (int j : {x + 1, x + 2, x + 3, x + 3 + ell, x + 2 + ell, x + 2 + 2 * ell,
                  x + 3 + 2 * ell, x + 4 + 2 * ell})
      push(s, n, 0, j);
    for (int t = 0; t <= ell - 3; ++t) push(s, n, 0, x + 4 + ell + t);
    push(s, n, 0, x + 1 + 3 * ell);
    x += 3 * ell + 1;
  }
  if (s.back() != s.front())
    fail(ErrorKind::InternalVerificationFailed, "long cycle failed to close at " +
                                                    format_params(g.params));
  append_cycle_edges(out, s);
  return verified(g, out);
}

// Same 6-cycle, complementary cycle recovered by search; used where the
// claimed range outruns the decomposable alpha values.
std::optional<TwoFactor> base_alpha_search(const HtgGraph& g) {
  EndpointList c1;
  append_cycle_edges(c1, alpha_c1_seq(g.params.n, g.params.ell));
  auto rest = complementary_cycle_edges(g, c1);
  if (!rest) return std::nullopt;
  EndpointList out = c1;
  out.insert(out.end(), rest->begin(), rest->end());
  return verified(g, out);
}

// Two-column factor for even ell > 2 and representable alpha = n - 2*ell
// (alpha = 0 allowed): short cycle over levels 0..ell-3 and n-1, long cycle
// from beta P-paths, one R-path, gamma Q-paths and the closing jump.
TwoFactor base_beta(const HtgGraph& g, const Decomposition& d) {
  const int n = g.params.n, ell = g.params.ell;
  EndpointList out;

  Seq c1;
  push(c1, n, 0, 0);
  push(c1, n, 0, n - 1);
  push(c1, n, 1, n - 1);
  for (int t = 0; t <= ell - 3; ++t) push(c1, n, 1, t);
  for (int t = 0; t <= ell - 3; ++t) push(c1, n, 0, ell - 3 - t);
  append_cycle_edges(out, c1);

  Seq s;
  push(s, n, 0, ell - 2);
  int x = ell - 2;
  for (long long p = 0; p < d.beta; ++p) {
    for (int t = 1; t <= ell; ++t) push(s, n, 0, x + t);
    for (int t = 0; t <= ell + 1; ++t) push(s, n, 1, x + t);
    push(s, n, 0, x + ell + 1);
    push(s, n, 0, x + ell + 2);
    x += ell + 2;
  }
  for (int t = 1; t <= ell; ++t) push(s, n, 0, x + t);  // R-path
  for (int t = 0; t <= ell; ++t) push(s, n, 1, x + t);
  x += ell;
  for (long long q = 0; q < d.gamma; ++q) {
    push(s, n, 0, x + ell);
    for (int t = 1; t <= ell - 1; ++t) push(s, n, 0, x + ell - t);
    for (int t = 1; t <= ell; ++t) push(s, n, 1, x + t);
    x += ell;
  }
  push(s, n, 0, ell - 2);  // closing jump from (1, n-2)
  if (mod(x, n) != mod(n - 2, n))
    fail(ErrorKind::InternalVerificationFailed, "long cycle misaligned at " +
                                                    format_params(g.params));
  append_cycle_edges(out, s);
  return verified(g, out);
}

TwoFactor columns_factor(const HtgGraph& g) {
  EndpointList out;
  for (int i = 0; i < g.params.m; ++i)
    for (int j = 0; j < g.params.n; ++j)
      out.emplace_back(Vertex{i, j}, Vertex{i, mod(j + 1, g.params.n)});
  return verified(g, out);
}

// Three columns, jump offset 1: 6-cycle over levels 0,1,n-1 of columns 0,1
// plus one cycle through everything else.
TwoFactor base_L1(const HtgGraph& g) {
  const int n = g.params.n;
  EndpointList out;
  Seq c1;
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
           {0, 0}, {0, 1}, {1, 1}, {1, 0}, {1, n - 1}, {0, n - 1}, {0, 0}})
    push(c1, n, i, j);
  append_cycle_edges(out, c1);

  Seq s;
  push(s, n, 2, 0);
  push(s, n, 2, 1);
  for (int t = 0; t <= n - 4; ++t) push(s, n, 0, 2 + t);  // 2 .. n-2
  for (int t = 0; t <= n - 5; ++t) push(s, n, 2, n - 3 - t);  // n-3 .. 2
  for (int t = 0; t <= n - 4; ++t) push(s, n, 1, 2 + t);  // 2 .. n-2
  push(s, n, 2, n - 2);
  push(s, n, 2, n - 1);
  push(s, n, 2, 0);
  append_cycle_edges(out, s);
  return verified(g, out);
}

// Three columns, jump offset 3, n >= 8: 12-cycle over levels 0..3 of columns
// 0,1 and n-3..0 of column 2, plus the complementary cycle stitched from
// 6-edge hook paths.
TwoFactor base_L3_wide(const HtgGraph& g) {
  const int n = g.params.n;
  EndpointList out;
  Seq c3;
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{0, 0},
                                                                {0, 1},
                                                                {0, 2},
                                                                {0, 3},
                                                                {1, 3},
                                                                {1, 2},
                                                                {1, 1},
                                                                {1, 0},
                                                                {2, 0},
                                                                {2, n - 1},
                                                                {2, n - 2},
                                                                {2, n - 3},
                                                                {0, 0}})
    push(c3, n, i, j);
  append_cycle_edges(out, c3);

  if (n == 8) {
    Seq c4;
    for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
             {2, 1}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 7}, {1, 6}, {1, 5}, {1, 4},
             {2, 4}, {2, 3}, {2, 2}, {2, 1}})
      push(c4, n, i, j);
    append_cycle_edges(out, c4);
    return verified(g, out);
  }

  for (int x = 1; x <= n - 9; x += 2) {
    Seq p;
    for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
             {2, x}, {0, x + 3}, {0, x + 4}, {1, x + 4}, {1, x + 3}, {2, x + 3}, {2, x + 4}})
      push(p, n, i, j);
    for (size_t t = 0; t + 1 < p.size(); ++t) out.emplace_back(p[t], p[t + 1]);
  }
  out.emplace_back(Vertex{2, 1}, Vertex{2, 2});
  out.emplace_back(Vertex{2, 2}, Vertex{2, 3});
  out.emplace_back(Vertex{2, n - 7}, Vertex{0, n - 4});
  out.emplace_back(Vertex{2, n - 5}, Vertex{2, n - 4});
  out.emplace_back(Vertex{2, n - 4}, Vertex{1, n - 4});
  column_run(out, n, 0, n - 4, n - 1, +1);
  column_run(out, n, 1, n - 4, n - 1, +1);
  out.emplace_back(Vertex{0, n - 1}, Vertex{1, n - 1});
  return verified(g, out);
}

// Five columns of six levels, jump offset 3: the printed 12-cycle through
// column 1; its complement recovered by search (the companion cycle cannot
// be transcribed verbatim).
TwoFactor base_L3_5_6(const HtgGraph& g) {
  const int n = 6;
  Seq c2;
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
           {1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 3}, {0, 4}, {0, 5}, {1, 5}, {1, 4},
           {2, 4}, {2, 5}, {2, 0}, {1, 0}})
    push(c2, n, i, j);
  EndpointList used;
  append_cycle_edges(used, c2);
  auto rest = complementary_cycle_edges(g, used);
  if (!rest)
    fail(ErrorKind::InternalVerificationFailed, "no complementary cycle in HTG(5,6,3)");
  EndpointList out = used;
  out.insert(out.end(), rest->begin(), rest->end());
  return verified(g, out);
}

// Four columns, jump offset 0, n >= 6.
TwoFactor base_L0(const HtgGraph& g) {
  const int n = g.params.n;
  EndpointList out;
  Seq c1;
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
           {0, 0}, {0, 1}, {1, 1}, {1, 0}, {1, n - 1}, {0, n - 1}, {0, 0}})
    push(c1, n, i, j);
  append_cycle_edges(out, c1);

  Seq s;
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{
           {0, 2}, {3, 2}, {3, 1}, {3, 0}, {3, n - 1}, {2, n - 1}, {2, 0}, {2, 1}, {2, 2}})
    push(s, n, i, j);
  for (int t = 0; t <= n - 4; ++t) push(s, n, 1, 2 + t);          // (1,2)..(1,n-2)
  for (int t = 0; t <= n - 5; ++t) push(s, n, 2, n - 2 - t);      // (2,n-2)..(2,3)
  for (int t = 0; t <= n - 5; ++t) push(s, n, 3, 3 + t);          // (3,3)..(3,n-2)
  for (int t = 0; t <= n - 4; ++t) push(s, n, 0, n - 2 - t);      // (0,n-2)..(0,2)
  append_cycle_edges(out, s);
  return verified(g, out);
}

// Four columns, jump offset 2, n >= 6: printed long cycle, complement by
// search.
TwoFactor base_L2(const HtgGraph& g) {
  const int n = g.params.n;
  Seq c1;
  push(c1, n, 0, 0);
  push(c1, n, 0, 1);
  for (int t = 0; t <= n - 3; ++t) push(c1, n, 1, 1 + t);      // (1,1)..(1,n-2)
  for (int t = 0; t <= n - 3; ++t) push(c1, n, 2, n - 2 - t);  // (2,n-2)..(2,1)
  for (int t = 0; t <= n - 3; ++t) push(c1, n, 3, 1 + t);      // (3,1)..(3,n-2)
  push(c1, n, 0, 0);
  EndpointList used;
  append_cycle_edges(used, c1);
  auto rest = complementary_cycle_edges(g, used);
  if (!rest)
    fail(ErrorKind::InternalVerificationFailed,
         "no complementary cycle in " + format_params(g.params));
  EndpointList out = used;
  out.insert(out.end(), rest->begin(), rest->end());
  return verified(g, out);
}

// ---------------------------------------------------------------------------
// Lifting a base factor to the target column count
// ---------------------------------------------------------------------------

// Applies fills between the last two columns until reaching target_m,
// alternating directions from `first`.  A one-column base goes through the
// jump-replacement expansion for its first step.
TwoFactor lift_to(const TwoFactor& base, int target_m, FillDirection first) {
  TwoFactor f = base;
  FillDirection dir = first;
  while (f.params.m < target_m) {
    HtgGraph host = build_graph(f.params);
    f = f.params.m == 1 ? expand_1_to_3(host, f, dir) : fill(host, f, f.params.m - 2, dir);
    dir = flipped(dir);
  }
  return f;
}

void add_lift_variants(FactorFamily& fam, const TwoFactor& base, int target_m) {
  if (base.params.m == target_m) {
    fam.factors.push_back(base);
    fam.labels.emplace_back();
    return;
  }
  fam.factors.push_back(lift_to(base, target_m, FillDirection::Down));
  fam.labels.emplace_back("fills=down-first");
  fam.factors.push_back(lift_to(base, target_m, FillDirection::Up));
  fam.labels.emplace_back("fills=up-first");
}

}  // namespace

// ---------------------------------------------------------------------------
// Families and dispatch
// ---------------------------------------------------------------------------

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Auto: return "auto";
    case TheoremId::O3: return "O3";
    case TheoremId::Alpha: return "alpha";
    case TheoremId::Zero: return "zero";
    case TheoremId::Beta: return "beta";
    case TheoremId::L1: return "L1";
    case TheoremId::L3: return "L3";
    case TheoremId::OddGen: return "oddgen";
    case TheoremId::L0: return "L0";
    case TheoremId::L2: return "L2";
    case TheoremId::EvenGen: return "evengen";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (TheoremId id : {TheoremId::Auto, TheoremId::O3, TheoremId::Alpha, TheoremId::Zero,
                       TheoremId::Beta, TheoremId::L1, TheoremId::L3, TheoremId::OddGen,
                       TheoremId::L0, TheoremId::L2, TheoremId::EvenGen})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

namespace {

[[noreturn]] void unsupported(const std::string& what) { fail(ErrorKind::Unsupported, what); }

FactorFamily make_family(const HtgParams& params, std::string theorem) {
  FactorFamily fam;
  fam.params = params;
  fam.theorem = std::move(theorem);
  return fam;
}

// Base factor on one column for odd ell > 3: decomposition route first,
// search route inside the asymptotic range where alpha fails to decompose.
std::pair<TwoFactor, std::string> alpha_base(const HtgGraph& g, bool allow_search) {
  const int n = g.params.n, ell = g.params.ell;
  long long alpha = n - 2 * ell;
  if (alpha > 0) {
    if (auto d = decompose_even(alpha, ell + 1, 3 * ell + 1)) {
      return {base_alpha(g, *d), "beta=" + std::to_string(d->beta) +
                                     ",gamma=" + std::to_string(d->gamma)};
    }
  }
  if (allow_search && n > bound_odd(ell)) {
    if (auto f = base_alpha_search(g)) return {*f, "C2=search"};
    fail(ErrorKind::InternalVerificationFailed,
         "no complementary cycle found for " + format_params(g.params));
  }
  fail(ErrorKind::NoDecomposition,
       "alpha = " + std::to_string(alpha) + " is not a nonnegative combination of " +
           std::to_string(ell + 1) + " and " + std::to_string(3 * ell + 1) + " for " +
           format_params(g.params));
}

std::pair<TwoFactor, std::string> beta_base(const HtgGraph& g) {
  const int n = g.params.n, ell = g.params.ell;
  long long alpha = n - 2 * ell;
  if (alpha < 0)
    unsupported("beta requires n >= 2*ell, got " + format_params(g.params));
  auto d = decompose_even(alpha, ell + 2, ell);
  if (!d)
    fail(ErrorKind::NoDecomposition,
         "alpha = " + std::to_string(alpha) + " is not a nonnegative combination of " +
             std::to_string(ell + 2) + " and " + std::to_string(ell) + " for " +
             format_params(g.params));
  return {base_beta(g, *d),
          "beta=" + std::to_string(d->beta) + ",gamma=" + std::to_string(d->gamma)};
}

}  // namespace

FactorFamily builder_family(const HtgParams& params, TheoremId id) {
  const int m = params.m, n = params.n, ell = params.ell;
  HtgGraph g = build_graph(params);

  switch (id) {
    case TheoremId::O3: {
      if (m != 1 || ell != 3) unsupported("O3 covers HTG(1,n,3) only");
      if (n % 4 != 0 || n <= 6)
        unsupported("O3: HTG(1,n,3) is 2-spanning cyclable iff n = 0 (mod 4) and n > 6");
      FactorFamily fam = make_family(params, "O3");
      fam.factors = {base_O3_main(g), base_O3_forced(g)};
      fam.labels = {"", "forced"};
      return fam;
    }
    case TheoremId::Alpha: {
      if (m != 1 || ell % 2 == 0 || ell <= 3)
        unsupported("alpha covers HTG(1,n,ell) with odd ell > 3");
      long long a = n - 2 * ell;
      if (a <= 0) unsupported("alpha requires n > 2*ell");
      auto d = decompose_even(a, ell + 1, 3 * ell + 1);
      if (!d)
        fail(ErrorKind::NoDecomposition,
             "alpha = " + std::to_string(a) + " is not a nonnegative combination of " +
                 std::to_string(ell + 1) + " and " + std::to_string(3 * ell + 1));
      FactorFamily fam = make_family(params, "alpha");
      fam.factors = {base_alpha(g, *d)};
      fam.labels = {"beta=" + std::to_string(d->beta) + ",gamma=" + std::to_string(d->gamma)};
      return fam;
    }
    case TheoremId::Beta: {
      if (m != 2 || ell % 2 != 0 || ell <= 2)
        unsupported("beta covers HTG(2,n,ell) with even ell > 2");
      auto [f, note] = beta_base(g);
      FactorFamily fam = make_family(params, "beta");
      fam.factors = {columns_factor(g), f};
      fam.labels = {"columns", note};
      return fam;
    }
    case TheoremId::L1: {
      if (m % 2 == 0 || m < 3 || ell != 1) unsupported("L1 covers HTG(m,n,1) with odd m >= 3");
      if (n <= 4) unsupported("L1: HTG(m,4,1) is not 2-spanning cyclable");
      FactorFamily fam = make_family(params, "L1");
      add_lift_variants(fam, base_L1(build_graph(validate(3, n, 1))), m);
      return fam;
    }
    case TheoremId::L3: {
      if (m % 2 == 0 || m < 3 || ell != 3) unsupported("L3 covers HTG(m,n,3) with odd m >= 3");
      if (n == 4) unsupported("L3: HTG(m,4,3) = HTG(m,4,1) is not 2-spanning cyclable");
      FactorFamily fam = make_family(params, "L3");
      if (n == 6) {
        if (m < 5) unsupported("L3: HTG(3,6,3) is not 2-spanning cyclable");
        TwoFactor base = base_L3_5_6(build_graph(validate(5, 6, 3)));
        add_lift_variants(fam, base, m);
        for (auto& label : fam.labels)
          label = label.empty() ? "C1=search" : ("C1=search," + label);
      } else {
        add_lift_variants(fam, base_L3_wide(build_graph(validate(3, n, 3))), m);
      }
      return fam;
    }
    case TheoremId::OddGen: {
      if (m % 2 == 0 || m < 3 || ell % 2 == 0 || ell <= 3)
        unsupported("oddgen covers HTG(m,n,ell) with odd m >= 3 and odd ell > 3");
      auto [base, note] = alpha_base(build_graph(validate(1, n, ell)), true);
      FactorFamily fam = make_family(params, "oddgen");
      add_lift_variants(fam, base, m);
      if (!note.empty())
        for (auto& label : fam.labels) label = label.empty() ? note : (note + "," + label);
      return fam;
    }
    case TheoremId::L0: {
      if (m % 2 != 0 || m < 4 || ell != 0) unsupported("L0 covers HTG(m,n,0) with even m >= 4");
      if (n <= 4) unsupported("L0: HTG(m,4,0) is not 2-spanning cyclable for m > 2");
      FactorFamily fam = make_family(params, "L0");
      add_lift_variants(fam, base_L0(build_graph(validate(4, n, 0))), m);
      return fam;
    }
    case TheoremId::L2: {
      if (m % 2 != 0 || m < 4 || ell != 2) unsupported("L2 covers HTG(m,n,2) with even m >= 4");
      if (n <= 4) unsupported("L2: HTG(m,4,2) = HTG(m,4,0) is not 2-spanning cyclable for m > 2");
      FactorFamily fam = make_family(params, "L2");
      add_lift_variants(fam, base_L2(build_graph(validate(4, n, 2))), m);
      for (auto& label : fam.labels)
        label = label.empty() ? "C2=search" : ("C2=search," + label);
      return fam;
    }
    case TheoremId::EvenGen: {
      if (m % 2 != 0 || m < 4 || ell % 2 != 0 || ell <= 2)
        unsupported("evengen covers HTG(m,n,ell) with even m >= 4 and even ell >= 4");
      auto [base, note] = beta_base(build_graph(validate(2, n, ell)));
      FactorFamily fam = make_family(params, "evengen");
      add_lift_variants(fam, base, m);
      for (auto& label : fam.labels) label = label.empty() ? note : (note + "," + label);
      return fam;
    }
    case TheoremId::Zero:
      unsupported("zero builds per-pair band factors; use build_zero");
    case TheoremId::Auto:
      unsupported("builder_family needs a concrete theorem id");
  }
  unsupported("unreachable");
}

namespace {

// Searches the G-orbit of the family for a factor separating the pair:
// g(F) separates (x, y) exactly when F separates (g^{-1}x, g^{-1}y).
SeparationCertificate dispatch(const HtgGraph& g, const FactorFamily& fam, Vertex x, Vertex y) {
  if (x == y) fail(ErrorKind::SameVertex, "separation requires two distinct vertices");
  const HtgParams& params = g.params;
  for (const GroupElement& h : group_elements(params)) {
    Vertex hx = apply(params, h, x);
    Vertex hy = apply(params, h, y);
    int ix = g.index(hx), iy = g.index(hy);
    for (size_t k = 0; k < fam.factors.size(); ++k) {
      const TwoFactor& f = fam.factors[k];
      if (f.cycle_count() != 2 || f.cycle_of[ix] == f.cycle_of[iy]) continue;
      GroupElement shift = inverse(params, h);
      TwoFactor image = apply_to_factor(g, shift, f);
      std::string provenance = fam.theorem;
      std::string detail = fam.labels.size() > k ? fam.labels[k] : std::string();
      provenance += "[";
      if (!detail.empty()) provenance += detail + ",";
      provenance += "g=" + format_element(shift) + "]";
      return make_certificate(g, std::move(image), x, y, std::move(provenance));
    }
  }
  unsupported("no group shift of the " + fam.theorem + " construction separates " +
              format_vertex(x) + " and " + format_vertex(y) + " on " + format_params(params));
}

void check_pair(const HtgGraph& g, Vertex x, Vertex y) {
  if (!g.contains(x) || !g.contains(y))
    fail(ErrorKind::OutOfRange, "pair vertex out of range for " + format_params(g.params));
  if (x == y) fail(ErrorKind::SameVertex, "separation requires two distinct vertices");
}

SeparationCertificate dispatch_builder(const HtgParams& params, TheoremId id, Vertex x,
                                       Vertex y) {
  HtgGraph g = build_graph(params);
  check_pair(g, x, y);
  return dispatch(g, builder_family(params, id), x, y);
}

}  // namespace

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

SeparationCertificate build_O3(int n, Vertex x, Vertex y) {
  HtgParams params = validate(1, n, 3);
  return dispatch_builder(params, TheoremId::O3, x, y);
}

SeparationCertificate build_alpha(int ell, int n, Vertex x, Vertex y) {
  HtgParams params = validate(1, n, ell);
  return dispatch_builder(params, TheoremId::Alpha, x, y);
}

SeparationCertificate build_beta(int ell, int n, Vertex x, Vertex y) {
  HtgParams params = validate(2, n, ell);
  return dispatch_builder(params, TheoremId::Beta, x, y);
}

SeparationCertificate build_zero(int n, Vertex x, Vertex y) {
  HtgParams params = validate(2, n, 0);
  HtgGraph g = build_graph(params);
  check_pair(g, x, y);

  if (x.i != y.i)
    return make_certificate(g, columns_factor(g), x, y, "zero[columns]");

  // Same column: two ladder bands, boundaries between the pair's levels,
  // each band spanning at least two levels.
  int d = mod(y.j - x.j, n);
  int p, len;
  if (d == 1) {
    p = mod(x.j - 1, n);
    len = 2;
  } else if (d == n - 1) {
    p = x.j;
    len = 2;
  } else {
    p = x.j;
    len = d;
  }
  EndpointList out;
  for (int offset : {0, len}) {
    int lo = mod(p + offset, n);
    int L = offset == 0 ? len : n - len;
    int hi = mod(lo + L - 1, n);
    column_run(out, n, 0, lo, hi, +1);
    column_run(out, n, 1, lo, hi, +1);
    out.emplace_back(Vertex{0, lo}, Vertex{1, lo});
    out.emplace_back(Vertex{0, hi}, Vertex{1, hi});
  }
  TwoFactor f = verified(g, out);
  return make_certificate(g, std::move(f), x, y,
                          "zero[bands p=" + std::to_string(p) + ",len=" + std::to_string(len) +
                              "]");
}

SeparationCertificate build_L1(const HtgParams& params, Vertex x, Vertex y) {
  return dispatch_builder(params, TheoremId::L1, x, y);
}

SeparationCertificate build_L3(const HtgParams& params, Vertex x, Vertex y) {
  return dispatch_builder(params, TheoremId::L3, x, y);
}

SeparationCertificate build_oddgen(const HtgParams& params, Vertex x, Vertex y) {
  return dispatch_builder(params, TheoremId::OddGen, x, y);
}

SeparationCertificate build_L0(const HtgParams& params, Vertex x, Vertex y) {
  return dispatch_builder(params, TheoremId::L0, x, y);
}

namespace {

// HTG(2,4,2) and HTG(2,4,0) differ only by swapping u_{1,0} and u_{1,2}.
Vertex swap_ends(Vertex v) {
  if (v.i == 1 && v.j == 0) return Vertex{1, 2};
  if (v.i == 1 && v.j == 2) return Vertex{1, 0};
  return v;
}

SeparationCertificate build_L2_2_4(const HtgParams& params, Vertex x, Vertex y) {
  HtgGraph g = build_graph(params);
  check_pair(g, x, y);
  SeparationCertificate inner = build_zero(4, swap_ends(x), swap_ends(y));
  EndpointList mapped;
  for (const Edge& e : inner.factor.edges)
    mapped.emplace_back(swap_ends(e.a), swap_ends(e.b));
  TwoFactor f = verified(g, mapped);
  return make_certificate(g, std::move(f), x, y, "L2[iso(2,4,0)," + inner.provenance + "]");
}

}  // namespace

SeparationCertificate build_L2(const HtgParams& params, Vertex x, Vertex y) {
  if (params.m == 2 && params.n == 4 && params.ell == 2) return build_L2_2_4(params, x, y);
  return dispatch_builder(params, TheoremId::L2, x, y);
}

SeparationCertificate build_evengen(const HtgParams& params, Vertex x, Vertex y) {
  return dispatch_builder(params, TheoremId::EvenGen, x, y);
}

// ---------------------------------------------------------------------------
// Facade
// ---------------------------------------------------------------------------

namespace {

SeparationCertificate oracle_certificate(const HtgGraph& g, Vertex x, Vertex y, int cap,
                                         const std::string& context) {
  if (g.order() > std::min(cap, 64))
    unsupported("no constructive route for " + format_params(g.params) + " (" + context +
                ") and order " + std::to_string(g.order()) + " exceeds the oracle cap");
  PairDecision decision = decide_pair(g, x, y, cap);
  if (!decision.separable)
    unsupported("pair " + format_vertex(x) + "," + format_vertex(y) + " is not separable on " +
                format_params(g.params) + " (" + context + ")");
  return make_certificate(g, std::move(*decision.witness), x, y, "oracle[" + context + "]");
}

SeparationCertificate separate_reduced(const HtgParams& params, Vertex x, Vertex y,
                                       int oracle_cap);

// ell > n/2 is handled through the level-negation isomorphism onto n - ell.
SeparationCertificate separate_mirrored(const HtgParams& params, Vertex x, Vertex y,
                                        int oracle_cap) {
  HtgParams reduced = validate(params.m, params.n, params.n - params.ell);
  auto mirror = [&](Vertex v) { return Vertex{v.i, mod(-v.j, params.n)}; };
  SeparationCertificate inner = separate_reduced(reduced, mirror(x), mirror(y), oracle_cap);
  HtgGraph g = build_graph(params);
  EndpointList mapped;
  for (const Edge& e : inner.factor.edges) mapped.emplace_back(mirror(e.a), mirror(e.b));
  TwoFactor f = verify_factor(g, mapped);
  return make_certificate(g, std::move(f), x, y, inner.provenance + "[mirror]");
}

SeparationCertificate with_oracle_fallback(const HtgParams& params, TheoremId id, Vertex x,
                                           Vertex y, int oracle_cap) {
  std::string context;
  try {
    return dispatch_builder(params, id, x, y);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::Unsupported && err.kind() != ErrorKind::NoDecomposition) throw;
    context = err.what();
  }
  return oracle_certificate(build_graph(params), x, y, oracle_cap, context);
}

SeparationCertificate separate_reduced(const HtgParams& params, Vertex x, Vertex y,
                                       int oracle_cap) {
  const int m = params.m, n = params.n, ell = params.ell;
  HtgGraph g = build_graph(params);
  check_pair(g, x, y);

  if (m % 2 == 1) {
    if (ell == 1) {
      // m >= 3 here; HTG(1,n,1) is rejected as a multigraph upstream.
      if (n == 4)
        return oracle_certificate(g, x, y, oracle_cap, "L1: HTG(m,4,1) is not 2-spanning cyclable");
      return build_L1(params, x, y);
    }
    if (ell == 3) {
      if (m == 1) {
        if (n % 4 == 0 && n > 6) return build_O3(n, x, y);
        return oracle_certificate(g, x, y, oracle_cap,
                                  "O3: HTG(1,n,3) is 2-spanning cyclable iff n = 0 (mod 4), n > 6");
      }
      if (n == 4)
        return oracle_certificate(g, x, y, oracle_cap, "L3: HTG(m,4,3) is not 2-spanning cyclable");
      if (n == 6 && m == 3)
        return oracle_certificate(g, x, y, oracle_cap, "L3: HTG(3,6,3) is not 2-spanning cyclable");
      return build_L3(params, x, y);
    }
    // odd ell > 3
    if (m == 1) {
      long long a = n - 2 * ell;
      if (a > 0 && decompose_even(a, ell + 1, 3 * ell + 1)) return build_alpha(ell, n, x, y);
      if (n > bound_odd(ell)) {
        HtgGraph host = build_graph(params);
        auto [base, note] = alpha_base(host, true);
        FactorFamily fam = make_family(params, "alpha");
        fam.factors = {base};
        fam.labels = {note};
        return dispatch(host, fam, x, y);
      }
      return oracle_certificate(g, x, y, oracle_cap, "alpha: n - 2*ell does not decompose");
    }
    return with_oracle_fallback(params, TheoremId::OddGen, x, y, oracle_cap);
  }

  // even m
  if (ell == 0) {
    if (m == 2) return build_zero(n, x, y);
    if (n == 4)
      return oracle_certificate(g, x, y, oracle_cap,
                                "L0: HTG(m,4,0) is not 2-spanning cyclable for m > 2");
    return build_L0(params, x, y);
  }
  if (ell == 2) {
    if (m == 2 && n == 4) return build_L2(params, x, y);
    if (m == 2)
      return oracle_certificate(g, x, y, oracle_cap,
                                "two: HTG(2,n,2) is not 2-spanning cyclable for n >= 6");
    if (n == 4)
      return oracle_certificate(g, x, y, oracle_cap,
                                "L2: HTG(m,4,2) is not 2-spanning cyclable for m > 2");
    return build_L2(params, x, y);
  }
  // even ell >= 4
  if (m == 2) return with_oracle_fallback(params, TheoremId::Beta, x, y, oracle_cap);
  return with_oracle_fallback(params, TheoremId::EvenGen, x, y, oracle_cap);
}

}  // namespace

SeparationCertificate separate(const HtgParams& params, Vertex x, Vertex y, TheoremId id,
                               int oracle_cap) {
  if (id != TheoremId::Auto) {
    switch (id) {
      case TheoremId::O3: return build_O3(params.n, x, y);
      case TheoremId::Alpha: return build_alpha(params.ell, params.n, x, y);
      case TheoremId::Zero:
        if (params.m != 2 || params.ell != 0) unsupported("zero covers HTG(2,n,0) only");
        return build_zero(params.n, x, y);
      case TheoremId::Beta: return build_beta(params.ell, params.n, x, y);
      case TheoremId::L1: return build_L1(params, x, y);
      case TheoremId::L3: return build_L3(params, x, y);
      case TheoremId::OddGen: return build_oddgen(params, x, y);
      case TheoremId::L0: return build_L0(params, x, y);
      case TheoremId::L2: return build_L2(params, x, y);
      case TheoremId::EvenGen: return build_evengen(params, x, y);
      case TheoremId::Auto: break;
    }
  }
  if (params.ell > params.n / 2) return separate_mirrored(params, x, y, oracle_cap);
  return separate_reduced(params, x, y, oracle_cap);
}

}  // namespace htg
