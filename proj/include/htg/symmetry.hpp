#ifndef HTG_SYMMETRY_HPP
#define HTG_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include <htg/core.hpp>
#include <htg/factor.hpp>

namespace htg {

/// An element rho^a pi^b of the abelian group G = <rho, pi>, in normal form
/// a in [0, n/2), b in [0, m).  The relation pi^m = rho^{(m+ell)/2} folds
/// surplus pi-exponent into a.
struct GroupElement {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// rho^k: u_{i,j} -> u_{i,j+2k}.
Vertex apply_rho(const HtgParams& params, Vertex v, int k);

/// pi^k: u_{i,j} -> u_{i+1,j+1} stepping columns, with the wrap rule
/// pi(u_{m-1,j}) = u_{0,j+1+ell}.  Works for any integer k.
Vertex apply_pi(const HtgParams& params, Vertex v, int k);

GroupElement normalize(const HtgParams& params, long long a, long long b);
GroupElement identity();
GroupElement compose(const HtgParams& params, GroupElement g, GroupElement h);
GroupElement inverse(const HtgParams& params, GroupElement g);

Vertex apply(const HtgParams& params, GroupElement g, Vertex v);

inline int group_order(const HtgParams& params) { return params.m * params.n / 2; }

/// All of G in canonical order: a major, b minor.
std::vector<GroupElement> group_elements(const HtgParams& params);

/// The unique g in G with g(x) = y when x and y share an orbit (equal parity
/// of i + j); nullopt across orbits.  Computed algebraically.
std::optional<GroupElement> transporter(const HtgParams& params, Vertex x, Vertex y);

/// Image of a 2-factor under g; revalidated against the host graph.  The
/// image has the same cycle-length multiset.
TwoFactor apply_to_factor(const HtgGraph& graph, GroupElement g, const TwoFactor& factor);

std::string format_element(GroupElement g);

}  // namespace htg

#endif
