#include "bei/connectivity.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "bei/structure.hpp"
#include "bei/subsets.hpp"

namespace bei {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw DomainError(std::string(what) + " undefined: graph is disconnected");
}

// Residual network of the vertex-split digraph with unit capacities.
// Node 2v is v_in, node 2v+1 is v_out. No original arc has an antiparallel
// partner, so a residual bit flip per augmenting step is exact.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) {
        for (int v = 0; v < g.order(); ++v) {
            arcs_[in(v)] |= bit(out(v));
            g.neighbors(v).for_each([&](int w) { arcs_[out(v)] |= bit(in(w)); });
        }
    }

    /// Number of internally vertex-disjoint s-t paths, stopping at `limit`.
    int disjoint_paths(int s, int t, int limit) const {
        auto residual = arcs_;
        const int source = out(s);
        const int sink = in(t);
        int flow = 0;
        std::array<std::int8_t, 2 * kHardVertexLimit> parent{};
        while (flow < limit) {
            std::uint64_t visited = bit(source);
            std::array<int, 2 * kHardVertexLimit> queue{};
            int head = 0;
            int tail = 0;
            queue[tail++] = source;
            bool found = false;
            while (head < tail && !found) {
                int x = queue[head++];
                for (std::uint64_t next = residual[x] & ~visited; next != 0; next &= next - 1) {
                    int y = std::countr_zero(next);
                    visited |= bit(y);
                    parent[y] = static_cast<std::int8_t>(x);
                    if (y == sink) {
                        found = true;
                        break;
                    }
                    queue[tail++] = y;
                }
            }
            if (!found) break;
            for (int y = sink; y != source; y = parent[y]) {
                int x = parent[y];
                residual[x] &= ~bit(y);
                residual[y] |= bit(x);
            }
            ++flow;
        }
        return flow;
    }

private:
    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }
    static std::uint64_t bit(int node) { return std::uint64_t{1} << node; }

    std::array<std::uint64_t, 2 * kHardVertexLimit> arcs_{};
};

}  // namespace

const Rational& ToughnessValue::value() const {
    if (!finite_) throw std::logic_error("toughness is infinite");
    return finite_->value;
}

VertexSet ToughnessValue::witness() const {
    if (!finite_) throw std::logic_error("toughness is infinite");
    return finite_->witness;
}

int vertex_connectivity(const Graph& g) {
    require_connected(g, "connectivity");
    const int n = g.order();
    if (is_complete(g)) return n - 1;

    int best = n - 1;
    for (int v = 0; v < n; ++v) best = std::min(best, g.degree(v));

    SplitNetwork network(g);
    for (int s = 0; s < n && best > 0; ++s) {
        VertexSet targets = g.vertices() - g.neighbors(s) - VertexSet::all(s + 1);
        targets.for_each([&](int t) { best = std::min(best, network.disjoint_paths(s, t, best)); });
    }
    return best;
}

int vertex_connectivity_bruteforce(const Graph& g) {
    require_connected(g, "connectivity");
    const int n = g.order();
    for (int k = 1; k <= n - 2; ++k) {
        bool disconnects = false;
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            disconnects = component_count(g, s) >= 2;
            return !disconnects;
        });
        if (disconnects) return k;
    }
    return n - 1;
}

bool is_l_vertex_connected(const Graph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("vertex-connectivity level must be at least 1");
    const int kappa = vertex_connectivity(g);
    return ell < g.order() && kappa >= ell;
}

ToughnessValue toughness(const Graph& g) {
    require_connected(g, "toughness");
    if (is_complete(g)) return ToughnessValue::infinite();

    const int n = g.order();
    // Separators smaller than κ leave G connected.
    const int kappa = vertex_connectivity(g);
    std::int64_t best_num = 0;
    std::int64_t best_den = 0;
    VertexSet witness;
    for (int k = kappa; k <= n - 2; ++k) {
        // c(S) <= n - k, so k/(n-k) bounds every ratio at this size and the
        // bound grows with k.
        if (best_den != 0 && std::int64_t{k} * best_den >= best_num * (n - k)) break;
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            const int c = component_count(g, s);
            if (c >= 2 && (best_den == 0 || std::int64_t{k} * best_den < best_num * c)) {
                best_num = k;
                best_den = c;
                witness = s;
            }
            return true;
        });
    }
    if (best_den == 0) throw std::logic_error("non-complete connected graph without a separator");
    return ToughnessValue::finite(make_rational(best_num, best_den), witness);
}

bool is_t_tough(const Graph& g, const Rational& t) {
    if (t < 0) throw std::invalid_argument("toughness threshold must be non-negative");
    require_connected(g, "toughness");
    if (is_complete(g)) return true;

    const int n = g.order();
    // Smallest separator size seen for each component count.
    std::array<int, kHardVertexLimit + 1> smallest;
    smallest.fill(std::numeric_limits<int>::max());
    for_each_subset(n, [&](VertexSet s) {
        if (s.empty()) return;
        const int c = component_count(g, s);
        if (c >= 2) smallest[c] = std::min(smallest[c], s.size());
    });
    for (int c = 2; c <= n; ++c) {
        if (smallest[c] == std::numeric_limits<int>::max()) continue;
        if (t * c > smallest[c]) return false;
    }
    return true;
}

}  // namespace bei
