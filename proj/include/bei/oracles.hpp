#ifndef BEI_ORACLES_HPP
#define BEI_ORACLES_HPP

// Slow reference implementations used by the property suite and the tests.
// They share no code with the routines they check: components come from a
// union-find over the edge list, and every search is a plain enumeration.

#include <cstdint>
#include <vector>

#include "bei/graph.hpp"
#include "bei/rational.hpp"

namespace bei::oracle {

/// Component label per vertex of G - S (-1 for removed vertices); labels
/// are the smallest vertex of each component.
std::vector<int> component_labels(const Graph& g, VertexSet removed);

int component_count(const Graph& g, VertexSet removed);

/// Maximal cliques by checking every vertex subset.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// No induced cycle of length >= 4, checked over all vertex subsets.
bool is_chordal(const Graph& g);

/// P_S(G) ⊆ P_T(G) via generators: S ⊆ T, and vertices outside T sharing
/// a component of G - S share a component of G - T.
bool prime_contained(const Graph& g, VertexSet s, VertexSet t);

/// Separators whose primes are inclusion-minimal among all P_S(G), in
/// (size, bitmask) order.
std::vector<VertexSet> minimal_prime_separators(const Graph& g);

struct Multiplicities {
    BigInt hilbert_samuel;
    Rational hilbert_kunz;
};

/// Additivity over the top-dimensional primes among `minimal_separators`,
/// each prime contributing the product of its determinantal block factors.
Multiplicities multiplicities_from_primes(const Graph& g, const std::vector<VertexSet>& minimal_separators);

/// Toughness by scanning every subset, no pruning. Returns {num, den}, or
/// {0, 0} for complete graphs.
std::pair<int, int> toughness_ratio(const Graph& g);

}  // namespace bei::oracle

#endif  // BEI_ORACLES_HPP
