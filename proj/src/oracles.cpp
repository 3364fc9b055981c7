#include "bei/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "bei/subsets.hpp"

namespace bei::oracle {

namespace {

int find(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

bool is_clique(const Graph& g, VertexSet s) {
    auto m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (!g.adjacent(m[a], m[b])) return false;
    return true;
}

// Induced subgraph on `s` is a single cycle: connected, all degrees two.
bool induces_cycle(const Graph& g, VertexSet s) {
    auto m = s.members();
    for (int v : m) {
        int deg = 0;
        for (int w : m) deg += g.adjacent(v, w);
        if (deg != 2) return false;
    }
    return component_count(g, g.vertices() - s) == 1;
}

}  // namespace

std::vector<int> component_labels(const Graph& g, VertexSet removed) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : g.edges()) {
        if (removed.contains(u) || removed.contains(v)) continue;
        int a = find(parent, u);
        int b = find(parent, v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (!removed.contains(v)) label[v] = find(parent, v);
    }
    return label;
}

int component_count(const Graph& g, VertexSet removed) {
    auto label = component_labels(g, removed);
    int count = 0;
    for (int v = 0; v < g.order(); ++v) count += label[v] == v;
    return count;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> cliques;
    for_each_subset(n, [&](VertexSet s) {
        if (s.empty() || !is_clique(g, s)) return;
        for (int v = 0; v < n; ++v) {
            if (!s.contains(v) && is_clique(g, s.with(v))) return;
        }
        cliques.push_back(s);
    });
    std::sort(cliques.begin(), cliques.end(), lexicographic_less);
    return cliques;
}

bool is_chordal(const Graph& g) {
    bool chordal = true;
    for_each_subset(g.order(), [&](VertexSet s) {
        if (chordal && s.size() >= 4 && induces_cycle(g, s)) chordal = false;
    });
    return chordal;
}

bool prime_contained(const Graph& g, VertexSet s, VertexSet t) {
    if (!s.is_subset_of(t)) return false;
    auto ls = component_labels(g, s);
    auto lt = component_labels(g, t);
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            if (t.contains(i) || t.contains(j)) continue;
            if (ls[i] == ls[j] && lt[i] != lt[j]) return false;
        }
    }
    return true;
}

std::vector<VertexSet> minimal_prime_separators(const Graph& g) {
    const int n = g.order();
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::vector<int>> labels(total);
    for (std::size_t m = 0; m < total; ++m) labels[m] = component_labels(g, VertexSet(static_cast<Mask>(m)));

    auto contained = [&](std::size_t s, std::size_t t) {
        if ((s & ~t) != 0) return false;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (((t >> i) & 1U) || ((t >> j) & 1U)) continue;
                if (labels[s][i] == labels[s][j] && labels[t][i] != labels[t][j]) return false;
            }
        }
        return true;
    };

    std::vector<VertexSet> out;
    for (std::size_t t = 0; t < total; ++t) {
        bool minimal = true;
        for (std::size_t s = 0; s < total && minimal; ++s) {
            if (s != t && contained(s, t)) minimal = false;
        }
        if (minimal) out.emplace_back(static_cast<Mask>(t));
    }
    std::sort(out.begin(), out.end(), size_then_mask_less);
    return out;
}

Multiplicities multiplicities_from_primes(const Graph& g, const std::vector<VertexSet>& separators) {
    const int n = g.order();
    int top = -1;
    for (VertexSet s : separators) top = std::max(top, n + component_count(g, s) - s.size());

    Multiplicities out{0, 0};
    for (VertexSet s : separators) {
        if (n + component_count(g, s) - s.size() != top) continue;
        auto label = component_labels(g, s);
        BigInt e = 1;
        Rational ehk = 1;
        for (int root = 0; root < n; ++root) {
            if (label[root] != root) continue;
            int size = 0;
            for (int v = 0; v < n; ++v) size += label[v] == root;
            BigInt fact = 1;
            for (int k = 2; k <= size + 1; ++k) fact *= k;
            e *= size;
            ehk *= Rational(BigInt(size), BigInt(2)) + Rational(BigInt(size), fact);
        }
        out.hilbert_samuel += e;
        out.hilbert_kunz += ehk;
    }
    return out;
}

std::pair<int, int> toughness_ratio(const Graph& g) {
    int best_num = 0;
    int best_den = 0;
    for_each_subset(g.order(), [&](VertexSet s) {
        if (s.empty()) return;
        const int c = component_count(g, s);
        if (c < 2) return;
        if (best_den == 0 || s.size() * best_den < best_num * c) {
            best_num = s.size();
            best_den = c;
        }
    });
    if (best_den != 0) {
        const int d = std::gcd(best_num, best_den);
        best_num /= d;
        best_den /= d;
    }
    return {best_num, best_den};
}

}  // namespace bei::oracle
