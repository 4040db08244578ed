#ifndef HTG_FACTOR_HPP
#define HTG_FACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include <htg/core.hpp>

namespace htg {

/// A spanning 2-regular edge subset together with its cycle decomposition.
/// Any cycle count is allowed (a Hamilton cycle is a one-cycle 2-factor);
/// separation additionally demands exactly two cycles.
struct TwoFactor {
  HtgParams params;
  std::vector<Edge> edges;  // canonical order, sorted by endpoint indices

  // Cycles sorted by minimum flattened vertex index, each rotated to start at
  // its minimum vertex and oriented toward the smaller neighbor.
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_of;  // flattened vertex index -> cycle id

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  std::vector<int> cycle_lengths() const;
  bool uses(const HtgGraph& g, Vertex a, Vertex b) const;
};

/// Checks that `edges` is a subset of the host's edge set in which every
/// vertex has valency exactly 2, and returns the factor with its cycle
/// decomposition.  Throws NotSpanning naming the first violating vertex,
/// or MismatchedFactor for edges not present in the host.
TwoFactor verify_factor(const HtgGraph& graph, const std::vector<Edge>& edges);

/// Convenience overload: endpoints only, kinds resolved against the host.
TwoFactor verify_factor(const HtgGraph& graph,
                        const std::vector<std::pair<Vertex, Vertex>>& endpoints);

/// True iff the factor consists of exactly two cycles and x, y lie on
/// distinct ones.  Throws SameVertex when x == y.
bool separates(const TwoFactor& factor, Vertex x, Vertex y);

/// A verified "these two vertices lie on distinct cycles" witness.
struct SeparationCertificate {
  HtgParams params;
  std::pair<Vertex, Vertex> pair;
  TwoFactor factor;
  std::string provenance;
};

/// Builds the certificate, re-checking that the factor has exactly two
/// cycles separating the pair (InternalVerificationFailed otherwise).
SeparationCertificate make_certificate(const HtgGraph& graph, TwoFactor factor, Vertex x,
                                       Vertex y, std::string provenance);

}  // namespace htg

#endif
