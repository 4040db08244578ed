#ifndef HTG_DOT_HPP
#define HTG_DOT_HPP

#include <string>

#include <htg/factor.hpp>

namespace htg {

/// Deterministic Graphviz text: vertices pinned to their (column, level) grid
/// position, columns left to right and levels bottom to top.  When a factor
/// is given its edges are drawn bold and the rest dashed gray; a factor built
/// for different params raises MismatchedFactor.
std::string export_dot(const HtgGraph& graph, const TwoFactor* highlight = nullptr);

}  // namespace htg

#endif
