#ifndef BEI_GRAPH_HPP
#define BEI_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bei {

/// Graphs never exceed this many vertices; subset enumeration is 2^n.
inline constexpr int kHardVertexLimit = 30;
/// Default cap applied by the parsers and the command line.
inline constexpr int kDefaultVertexCap = 24;

using Mask = std::uint32_t;

/// Subset of the vertices {0, ..., n-1} of a graph, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    /// The full set {0, ..., n-1}.
    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
    }

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (Mask{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(Mask{1} << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Orders by bitmask value.
    constexpr auto operator<=>(const VertexSet&) const = default;

    /// Members in increasing order.
    std::vector<int> members() const;

    /// Iterates members in increasing order without allocating.
    template <typename Fn>
    constexpr void for_each(Fn&& fn) const {
        for (Mask rest = bits_; rest != 0; rest &= rest - 1) fn(std::countr_zero(rest));
    }

    /// Renders 1-based, e.g. "{1,3}".
    std::string to_string() const;

private:
    Mask bits_ = 0;
};

/// (size, bitmask) order used for separators throughout.
inline bool size_then_mask_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

/// Lexicographic order of the sorted member lists.
bool lexicographic_less(VertexSet a, VertexSet b);

/// Simple undirected graph on {0, ..., n-1}.
///
/// Rows are bitmasks, so adjacency stays symmetric and loop-free by
/// construction through add_edge.
class Graph {
public:
    /// Throws std::invalid_argument unless 1 <= n <= kHardVertexLimit.
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    /// Throws std::invalid_argument on a loop or an out-of-range vertex.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::all(n_); }

    /// Union of the neighbourhoods of every member of `s`.
    VertexSet neighbors_of(VertexSet s) const {
        Mask acc = 0;
        s.for_each([&](int v) { acc |= rows_[v]; });
        return VertexSet(acc);
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const;

private:
    int n_;
    std::array<Mask, kHardVertexLimit> rows_{};
};

/// Graph induced on `keep`, relabelled 0..|keep|-1 in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Disjoint union, vertices of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Standard families used as fixtures.
namespace families {
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// Vertices 0..m-1 form one side, m..m+k-1 the other.
Graph complete_bipartite(int m, int k);
/// Star K_{1,leaves} with centre 0.
Graph star(int leaves);
/// Cycle 1..n-1 plus hub 0 joined to every rim vertex.
Graph wheel(int n);
Graph empty(int n);
}  // namespace families

}  // namespace bei

#endif  // BEI_GRAPH_HPP
