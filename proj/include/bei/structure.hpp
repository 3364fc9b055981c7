#ifndef BEI_STRUCTURE_HPP
#define BEI_STRUCTURE_HPP

#include <array>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Connected components of G - S, ordered by smallest member.
/// Removing every vertex yields an empty list.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

/// Number of connected components of G - S.
int component_count(const Graph& g, VertexSet removed = {});

/// Allocation-free variant for the hot enumeration loops: writes the
/// components of G - S into `out` (ordered by smallest member) and returns
/// how many there are.
int component_masks(const Graph& g, VertexSet removed, std::array<Mask, kHardVertexLimit>& out);

bool is_connected(const Graph& g);

/// K_1 counts as complete.
bool is_complete(const Graph& g);

/// Inclusion-maximal cliques, sorted lexicographically by member list.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal, empty otherwise.
    std::vector<int> elimination_order;
};

/// Maximum cardinality search followed by a check that the reversed visit
/// order is a perfect elimination ordering.
ChordalityResult chordality(const Graph& g);

inline bool is_chordal(const Graph& g) { return chordality(g).chordal; }

/// True when each vertex's later neighbours in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

}  // namespace bei

#endif  // BEI_STRUCTURE_HPP
