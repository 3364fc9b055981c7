#ifndef BEI_CONNECTIVITY_HPP
#define BEI_CONNECTIVITY_HPP

#include <optional>
#include <stdexcept>

#include "bei/graph.hpp"
#include "bei/rational.hpp"

namespace bei {

/// Raised when a measure is asked of a graph outside its domain, e.g. the
/// toughness of a disconnected graph.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Toughness: either infinite (complete graphs) or a finite ratio |S|/c(S)
/// attained by a witness separator.
class ToughnessValue {
public:
    static ToughnessValue infinite() { return ToughnessValue(); }
    static ToughnessValue finite(Rational value, VertexSet witness) {
        ToughnessValue t;
        t.finite_ = Finite{std::move(value), witness};
        return t;
    }

    bool is_infinite() const { return !finite_.has_value(); }
    /// Throws std::logic_error when infinite.
    const Rational& value() const;
    VertexSet witness() const;

    /// Infinite compares above every rational.
    bool at_least(const Rational& t) const { return is_infinite() || finite_->value >= t; }

    bool operator==(const ToughnessValue&) const = default;

private:
    struct Finite {
        Rational value;
        VertexSet witness;
        bool operator==(const Finite&) const = default;
    };
    std::optional<Finite> finite_;
};

/// κ(G) via unit-capacity max flow on the vertex-split digraph.
/// n-1 for complete graphs, 0 for K_1. Throws DomainError when disconnected.
int vertex_connectivity(const Graph& g);

/// κ(G) by scanning separators in increasing size. Same contract as
/// vertex_connectivity; kept as the reference for it.
int vertex_connectivity_bruteforce(const Graph& g);

/// True iff ell < n and κ(G) >= ell. Requires ell >= 1 and G connected.
bool is_l_vertex_connected(const Graph& g, int ell);

/// Exact τ(G) = min |S|/c(S) over S with c(S) >= 2. The witness is the
/// smallest separator attaining the minimum, ties broken by bitmask value.
ToughnessValue toughness(const Graph& g);

/// Checks t*c(S) <= |S| for every S with c(S) >= 2 directly. Requires t >= 0.
bool is_t_tough(const Graph& g, const Rational& t);

}  // namespace bei

#endif  // BEI_CONNECTIVITY_HPP
