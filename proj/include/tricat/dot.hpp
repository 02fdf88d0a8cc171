#ifndef TRICAT_DOT_HPP
#define TRICAT_DOT_HPP

#include <string>

#include "tricat/toolkit.hpp"

namespace tricat {

/// Braid of a composition as a DOT digraph: one node per object, labeled
/// edges for the four strands and the connecting morphisms.
std::string dot_braid(const Instance& inst, const BraidDiagram& b);

/// The completed grid as a DOT digraph; the anticommuting corner square is
/// marked with a "⊖" node.
std::string dot_grid(const Instance& inst, const GridCompletion& gc);

}  // namespace tricat

#endif
