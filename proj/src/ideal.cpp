#include "bei/ideal.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "bei/structure.hpp"
#include "bei/subsets.hpp"

namespace bei {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

void require_non_complete(const Graph& g, const char* what) {
    require_connected(g, what);
    if (is_complete(g)) throw DomainError(std::string(what) + " requires a non-complete graph");
}

// Calls fn(S, blocks, block_count) for every S attaining alpha, in
// (size, bitmask) order. Returns alpha.
template <typename Fn>
int for_each_top_separator(const Graph& g, Fn&& fn) {
    const int n = g.order();
    int best = std::numeric_limits<int>::min();
    for_each_subset(n, [&](VertexSet s) { best = std::max(best, component_count(g, s) - s.size()); });
    std::array<Mask, kHardVertexLimit> blocks;
    for (int k = 0; k <= n; ++k) {
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            const int c = component_masks(g, s, blocks);
            if (c - k == best) fn(s, blocks, c);
            return true;
        });
    }
    return best;
}

}  // namespace

int prime_dimension(const Graph& g, VertexSet separator) {
    return g.order() + component_count(g, separator) - separator.size();
}

int alpha(const Graph& g) {
    int best = std::numeric_limits<int>::min();
    for_each_subset(g.order(), [&](VertexSet s) { best = std::max(best, component_count(g, s) - s.size()); });
    return best;
}

std::vector<CutProfile> top_cut_profiles(const Graph& g) {
    std::vector<CutProfile> out;
    for_each_top_separator(g, [&](VertexSet s, const auto&, int c) { out.push_back(CutProfile{s, c, c - s.size()}); });
    return out;
}

bool is_minimal_prime_separator(const Graph& g, VertexSet separator) {
    std::array<Mask, kHardVertexLimit> blocks;
    const int c = component_masks(g, separator, blocks);
    bool minimal = true;
    separator.for_each([&](int i) {
        const Mask around = g.neighbors(i).bits();
        int touched = 0;
        for (int b = 0; b < c; ++b) touched += (blocks[b] & around) != 0;
        if (touched < 2) minimal = false;
    });
    return minimal;
}

std::vector<MinimalPrime> minimal_primes(const Graph& g) {
    const int n = g.order();
    std::vector<MinimalPrime> out;
    std::array<Mask, kHardVertexLimit> blocks;
    for (int k = 0; k <= n; ++k) {
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            if (!is_minimal_prime_separator(g, s)) return true;
            const int c = component_masks(g, s, blocks);
            MinimalPrime p{s, {}, n + c - k};
            p.blocks.reserve(static_cast<std::size_t>(c));
            for (int b = 0; b < c; ++b) p.blocks.emplace_back(blocks[b]);
            out.push_back(std::move(p));
            return true;
        });
    }
    return out;
}

int krull_dimension(const Graph& g) { return g.order() + alpha(g); }

bool is_equidimensional(const Graph& g) {
    auto primes = minimal_primes(g);
    return std::all_of(primes.begin(), primes.end(),
                       [&](const MinimalPrime& p) { return p.dimension == primes.front().dimension; });
}

BigInt block_hilbert_samuel(int block_size) { return BigInt(block_size); }

Rational block_hilbert_kunz(int block_size) {
    const BigInt b(block_size);
    return Rational(b, BigInt(2)) + Rational(b, factorial(static_cast<unsigned>(block_size) + 1));
}

MultiplicityReport multiplicities(const Graph& g) {
    MultiplicityReport report;
    report.hilbert_samuel = 0;
    report.hilbert_kunz = 0;

    std::array<Rational, kHardVertexLimit + 1> hk_factor;
    for (int b = 1; b <= g.order(); ++b) hk_factor[b] = block_hilbert_kunz(b);

    report.alpha = for_each_top_separator(g, [&](VertexSet s, const auto& blocks, int c) {
        report.top_separators.push_back(s);
        BigInt e = 1;
        Rational ehk = 1;
        for (int b = 0; b < c; ++b) {
            const int size = std::popcount(blocks[b]);
            e *= size;
            ehk *= hk_factor[size];
        }
        report.hilbert_samuel += e;
        report.hilbert_kunz += ehk;
    });
    return report;
}

BigInt hilbert_samuel(const Graph& g) { return multiplicities(g).hilbert_samuel; }

Rational hilbert_kunz(const Graph& g) { return multiplicities(g).hilbert_kunz; }

int joint_dim_with_empty(const Graph& g, VertexSet separator) {
    require_connected(g, "joint dimension");
    if (separator.empty() || !separator.is_subset_of(g.vertices()) || !is_minimal_prime_separator(g, separator)) {
        throw DomainError("separator " + separator.to_string() + " does not give a non-empty minimal prime");
    }
    const int n = g.order();
    const int dim = n - separator.size() + 1;
    if (!is_complete(g) && dim > n - vertex_connectivity(g) + 1) {
        throw std::logic_error("minimal-prime separator smaller than the vertex connectivity");
    }
    return dim;
}

RationalInterval dim_bounds_from_toughness(const Graph& g) {
    require_non_complete(g, "dimension bounds from toughness");
    const Rational tau = toughness(g).value();
    if (tau >= 1) throw DomainError("dimension bounds from toughness require tau(G) < 1");
    const int n = g.order();
    return RationalInterval{n + (1 - tau) / tau, n + (n - 1) * (1 - tau)};
}

ToughnessBounds toughness_bounds_from_dimension(const Graph& g) {
    require_connected(g, "toughness bounds");
    const int n = g.order();
    const int dim = krull_dimension(g);
    ToughnessBounds bounds{make_rational(1, dim - n + 1), std::nullopt};
    if (!is_t_tough(g, 1)) bounds.upper = make_rational(dim - 1, n - 1);
    return bounds;
}

bool one_tough_via_primes(const Graph& g) {
    require_connected(g, "one-toughness via primes");
    const int n = g.order();
    if (krull_dimension(g) != n + 1) return false;
    for (const auto& p : minimal_primes(g)) {
        if (p.dimension == n + 1 && !p.separator.empty()) return false;
    }
    return true;
}

int depth_upper_bound(const Graph& g) {
    require_non_complete(g, "depth bound");
    return g.order() - vertex_connectivity(g) + 2;
}

int pd_lower_bound(const Graph& g) {
    require_non_complete(g, "projective dimension bound");
    return g.order() + vertex_connectivity(g) - 2;
}

bool is_disjoint_union_of_paths(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
    }
    // A forest has exactly n - c edges.
    return g.edge_count() == g.order() - component_count(g);
}

bool chordal_cm_sufficient(const Graph& g) {
    if (!is_chordal(g)) return false;
    const auto cliques = maximal_cliques(g);
    for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            if ((cliques[a] & cliques[b]).size() > 1) return false;
        }
    }
    for (int v = 0; v < g.order(); ++v) {
        auto containing = std::count_if(cliques.begin(), cliques.end(), [&](VertexSet c) { return c.contains(v); });
        if (containing > 2) return false;
    }
    return true;
}

}  // namespace bei
