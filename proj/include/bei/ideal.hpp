#ifndef BEI_IDEAL_HPP
#define BEI_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bei/connectivity.hpp"
#include "bei/graph.hpp"
#include "bei/rational.hpp"

// Invariants of R/J_G, R = K[x_1..x_n, y_1..y_n], read off the graph.
// Every prime of J_G has the form P_S(G): the variables of S together with
// the 2x2 minors of each completed component of G - S.

namespace bei {

/// A separator S with its component count c(S) and deficit c(S) - |S|.
struct CutProfile {
    VertexSet separator;
    int components = 0;
    int value = 0;

    bool operator==(const CutProfile&) const = default;
};

/// P_S(G) for a separator S whose prime is minimal over J_G.
struct MinimalPrime {
    VertexSet separator;
    /// Components of G - S, ordered by smallest member.
    std::vector<VertexSet> blocks;
    /// Krull dimension of R/P_S(G), i.e. n + |blocks| - |S|.
    int dimension = 0;

    bool operator==(const MinimalPrime&) const = default;
};

struct MultiplicityReport {
    int alpha = 0;
    /// Separators attaining alpha, in (size, bitmask) order.
    std::vector<VertexSet> top_separators;
    BigInt hilbert_samuel;
    /// Positive-characteristic invariant; the formula is independent of p.
    Rational hilbert_kunz;
};

struct RationalInterval {
    Rational lower;
    Rational upper;
};

struct ToughnessBounds {
    Rational lower;
    /// Present only when G is not 1-tough.
    std::optional<Rational> upper;
};

/// n + c(S) - |S|.
int prime_dimension(const Graph& g, VertexSet separator);

/// max over all S of c(S) - |S|.
int alpha(const Graph& g);

/// Every S attaining alpha, in (size, bitmask) order.
std::vector<CutProfile> top_cut_profiles(const Graph& g);

/// True when S is empty or every i in S touches at least two components of
/// G - S (equivalently c(S - {i}) < c(S)).
bool is_minimal_prime_separator(const Graph& g, VertexSet separator);

/// Minimal primes in (size, bitmask) order of their separators.
std::vector<MinimalPrime> minimal_primes(const Graph& g);

/// n + alpha(G).
int krull_dimension(const Graph& g);

bool is_equidimensional(const Graph& g);

/// e(R/J_G): sum over the top separators of the product of block sizes.
BigInt hilbert_samuel(const Graph& g);

/// e_HK(R/J_G): sum over the top separators of prod (b/2 + b/(b+1)!).
Rational hilbert_kunz(const Graph& g);

/// Both multiplicities from one enumeration.
MultiplicityReport multiplicities(const Graph& g);

/// Hilbert-Samuel multiplicity of the 2 x b generic determinantal ring: b.
BigInt block_hilbert_samuel(int block_size);

/// Hilbert-Kunz multiplicity of the 2 x b generic determinantal ring.
Rational block_hilbert_kunz(int block_size);

/// dim R/(P_0(G) + P_S(G)) = n - |S| + 1 for a non-empty minimal-prime
/// separator S of a connected graph. Also checks that it does not exceed
/// n - κ(G) + 1 when G is not complete.
int joint_dim_with_empty(const Graph& g, VertexSet separator);

/// n + (1-τ)/τ <= dim <= n + (n-1)(1-τ). Needs G connected with τ(G) < 1.
RationalInterval dim_bounds_from_toughness(const Graph& g);

/// 1/(dim - n + 1) <= τ, and τ <= (dim - 1)/(n - 1) when G is not 1-tough.
ToughnessBounds toughness_bounds_from_dimension(const Graph& g);

/// dim = n + 1 and the empty separator is the only minimal prime of that
/// dimension. Agrees with is_t_tough(G, 1) on connected graphs.
bool one_tough_via_primes(const Graph& g);

/// Depth of R/J_G is at most n - κ + 2. Needs G connected and not complete.
int depth_upper_bound(const Graph& g);

/// Projective dimension of R/J_G is at least n + κ - 2. Same hypotheses.
int pd_lower_bound(const Graph& g);

bool is_disjoint_union_of_paths(const Graph& g);

/// Chordal, distinct maximal cliques meet in at most one vertex, and every
/// vertex lies in at most two maximal cliques. Sufficient for CM.
bool chordal_cm_sufficient(const Graph& g);

}  // namespace bei

#endif  // BEI_IDEAL_HPP
