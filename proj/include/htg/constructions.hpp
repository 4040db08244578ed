#ifndef HTG_CONSTRUCTIONS_HPP
#define HTG_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include <htg/factor.hpp>
#include <htg/oracle.hpp>

namespace htg {

/// alpha = beta*x + gamma*y with everything even and gcd(x, y) = 2.
struct Decomposition {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
  int x = 0;
  int y = 0;
};

/// Smallest-gamma nonnegative solution of beta*x + gamma*y = alpha, if any.
/// Guaranteed to exist for even alpha > xy/2 - x - y.  Throws BadGcd unless
/// x, y are positive even with gcd 2.
std::optional<Decomposition> decompose_even(long long alpha, int x, int y);

/// Threshold above which every even alpha = n - 2*ell decomposes over
/// {ell+1, 3*ell+1}: (3*ell^2 - 4*ell - 3) / 2.  Odd ell > 3 only.
int bound_odd(int ell);

/// Same for {ell+2, ell}: (ell^2 + 2*ell - 4) / 2.  Even ell > 2 only.
int bound_even(int ell);

enum class FillDirection { Up, Down };

/// Column-doubling: subdivides every factor flat edge between columns
/// (left_column, left_column + 1), threading the two new columns so each
/// replacement path covers all their vertices.  Returns a 2-factor of
/// HTG(m+2, n, ell) with the same cycle count.  Throws NoFlatEdges when the
/// factor uses no flat edge between those columns.
TwoFactor fill(const HtgGraph& host, const TwoFactor& factor, int left_column,
               FillDirection direction);

/// The m = 1 special case (no flat edges exist): each used jump
/// [u_{0,j}, u_{0,j+ell}] becomes jump [u_{2,j}, u_{0,j+ell}] plus flat
/// [u_{0,j}, u_{1,j}], and vertical fills complete columns 1 and 2.
TwoFactor expand_1_to_3(const HtgGraph& host, const TwoFactor& factor,
                        FillDirection direction = FillDirection::Up);

enum class TheoremId { Auto, O3, Alpha, Zero, Beta, L1, L3, OddGen, L0, L2, EvenGen };

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

// Builders, one per constructive proof.  Each returns a verified certificate
// whose factor has exactly two cycles separating the pair, or throws
// Unsupported / NoDecomposition outside its hypothesis.
SeparationCertificate build_O3(int n, Vertex x, Vertex y);
SeparationCertificate build_alpha(int ell, int n, Vertex x, Vertex y);
SeparationCertificate build_zero(int n, Vertex x, Vertex y);
SeparationCertificate build_beta(int ell, int n, Vertex x, Vertex y);
SeparationCertificate build_L1(const HtgParams& params, Vertex x, Vertex y);
SeparationCertificate build_L3(const HtgParams& params, Vertex x, Vertex y);
SeparationCertificate build_oddgen(const HtgParams& params, Vertex x, Vertex y);
SeparationCertificate build_L0(const HtgParams& params, Vertex x, Vertex y);
SeparationCertificate build_L2(const HtgParams& params, Vertex x, Vertex y);
SeparationCertificate build_evengen(const HtgParams& params, Vertex x, Vertex y);

/// The base 2-factors a theorem contributes for the given parameters; pair
/// dispatch searches their orbit under G.  Exposed for property tests.
struct FactorFamily {
  HtgParams params;
  std::string theorem;
  std::vector<TwoFactor> factors;
  std::vector<std::string> labels;  // per-factor variant tag, may be empty
};

FactorFamily builder_family(const HtgParams& params, TheoremId id);

/// Facade: picks the governing theorem from (m parity, ell, n), reduces
/// ell > n/2 through the level-negation isomorphism, and falls back to the
/// oracle below the size cap.  Throws Unsupported (citing the governing
/// theorem) when the pair cannot be separated.
SeparationCertificate separate(const HtgParams& params, Vertex x, Vertex y,
                               TheoremId id = TheoremId::Auto,
                               int oracle_cap = kDefaultOracleCap);

}  // namespace htg

#endif
