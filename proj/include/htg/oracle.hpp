#ifndef HTG_ORACLE_HPP
#define HTG_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <htg/factor.hpp>

namespace htg {

inline constexpr int kDefaultOracleCap = 48;

/// Enumerates every 2-factor exactly once, as complements of the perfect
/// matchings of the cubic host, in deterministic order (branch on the least
/// uncovered vertex, neighbors ascending).  Throws TooLarge above the cap.
void for_each_two_factor(const HtgGraph& graph, const std::function<void(const TwoFactor&)>& fn,
                         int cap = kDefaultOracleCap);

std::vector<TwoFactor> enumerate_two_factors(const HtgGraph& graph, int cap = kDefaultOracleCap);

/// Number of perfect matchings (= number of 2-factors).
long long count_perfect_matchings(const HtgGraph& graph, int cap = kDefaultOracleCap);

struct PairDecision {
  bool separable = false;
  std::optional<TwoFactor> witness;  // first witness in enumeration order
};

/// Exact decision for one pair: is there a two-cycle 2-factor with x and y on
/// distinct cycles?  Early-exits at the first witness.
PairDecision decide_pair(const HtgGraph& graph, Vertex x, Vertex y, int cap = kDefaultOracleCap);

struct DecisionReport {
  HtgParams params;
  int pairs_checked = 0;
  long long witness_count = 0;  // distinct two-cycle 2-factors
  bool is_2sc = false;
  std::optional<std::pair<Vertex, Vertex>> counterexample;  // first in canonical order
  std::vector<bool> separable;  // order x order, symmetric

  bool pair_separable(const HtgGraph& g, Vertex x, Vertex y) const {
    return separable[g.index(x) * g.order() + g.index(y)];
  }
};

/// Exhaustive all-pairs separability matrix and 2-spanning-cyclability
/// verdict.  `jobs` > 1 splits the top-level search branches across threads;
/// the result is independent of the split.
DecisionReport decide_2sc(const HtgGraph& graph, int cap = kDefaultOracleCap, int jobs = 1);

/// Base-vertex reduction mode: marks only the pairs containing u_{0,0} and
/// u_{0,1} during enumeration and reconstructs the full matrix by orbit
/// transfer under G.  Agrees with decide_2sc everywhere; kept as a
/// cross-validated optimization.
DecisionReport decide_2sc_base_vertex(const HtgGraph& graph, int cap = kDefaultOracleCap);

std::string report_to_json(const DecisionReport& report);

enum class SurveyStatus { Yes, No, Invalid, TooLarge };

struct SurveyRow {
  int n = 0;
  int order = 0;
  SurveyStatus status = SurveyStatus::Invalid;
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  long long witness_count = 0;
  std::string note;
};

struct SurveyTable {
  int ell = 0;
  int m = 0;
  std::vector<SurveyRow> rows;
};

/// Per-n classification over even n in [n_lo, n_hi]; rows over the cap are
/// reported as such and the rest still computed.
SurveyTable survey(int ell, int m, int n_lo, int n_hi, int cap = kDefaultOracleCap, int jobs = 1);

std::string survey_to_text(const SurveyTable& table);
std::string survey_to_csv(const SurveyTable& table);

}  // namespace htg

#endif
