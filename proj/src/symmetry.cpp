#include <htg/symmetry.hpp>

namespace htg {

Vertex apply_rho(const HtgParams& params, Vertex v, int k) {
  return Vertex{v.i, mod(v.j + 2 * k, params.n)};
}

Vertex apply_pi(const HtgParams& params, Vertex v, int k) {
  // Every m consecutive pi-steps wrap through the jump offset exactly once.
  int wraps = floor_div(v.i + k, params.m);
  return Vertex{mod(v.i + k, params.m), mod(v.j + k + params.ell * wraps, params.n)};
}

GroupElement normalize(const HtgParams& params, long long a, long long b) {
  const int m = params.m, half = params.n / 2;
  long long carry = b >= 0 ? b / m : -((-b + m - 1) / m);
  long long b_red = b - carry * m;
  // pi^m = rho^{(m+ell)/2}
  long long a_red = a + carry * ((params.m + params.ell) / 2);
  a_red %= half;
  if (a_red < 0) a_red += half;
  return GroupElement{static_cast<int>(a_red), static_cast<int>(b_red)};
}

GroupElement identity() { return GroupElement{0, 0}; }

GroupElement compose(const HtgParams& params, GroupElement g, GroupElement h) {
  return normalize(params, static_cast<long long>(g.a) + h.a,
                   static_cast<long long>(g.b) + h.b);
}

GroupElement inverse(const HtgParams& params, GroupElement g) {
  return normalize(params, -static_cast<long long>(g.a), -static_cast<long long>(g.b));
}

Vertex apply(const HtgParams& params, GroupElement g, Vertex v) {
  return apply_rho(params, apply_pi(params, v, g.b), g.a);
}

std::vector<GroupElement> group_elements(const HtgParams& params) {
  std::vector<GroupElement> out;
  out.reserve(group_order(params));
  for (int a = 0; a < params.n / 2; ++a)
    for (int b = 0; b < params.m; ++b) out.push_back(GroupElement{a, b});
  return out;
}

std::optional<GroupElement> transporter(const HtgParams& params, Vertex x, Vertex y) {
  if ((x.i + x.j) % 2 != (y.i + y.j) % 2) return std::nullopt;
  const int m = params.m, n = params.n;
  int b = mod(y.i - x.i, m);
  int wrap = (x.i + b >= m) ? 1 : 0;
  int delta = mod(y.j - x.j - b - params.ell * wrap, n);
  // delta is even exactly when the orbit parities agree, checked above.
  if (delta % 2 != 0)
    fail(ErrorKind::InternalVerificationFailed, "odd level displacement within an orbit");
  return GroupElement{delta / 2, b};
}

TwoFactor apply_to_factor(const HtgGraph& graph, GroupElement g, const TwoFactor& factor) {
  std::vector<std::pair<Vertex, Vertex>> mapped;
  mapped.reserve(factor.edges.size());
  for (const Edge& e : factor.edges)
    mapped.emplace_back(apply(graph.params, g, e.a), apply(graph.params, g, e.b));
  return verify_factor(graph, mapped);
}

std::string format_element(GroupElement g) {
  return "rho^" + std::to_string(g.a) + "*pi^" + std::to_string(g.b);
}

}  // namespace htg
