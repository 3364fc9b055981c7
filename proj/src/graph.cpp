#include "bei/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bei {

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) {
        if (v < 0 || v >= 32) throw std::invalid_argument("vertex out of range");
        bits_ |= Mask{1} << v;
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    });
    out += '}';
    return out;
}

bool lexicographic_less(VertexSet a, VertexSet b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kHardVertexLimit) {
        throw std::invalid_argument("graph order must lie in [1, " + std::to_string(kHardVertexLimit) +
                                    "], got " + std::to_string(n));
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
    rows_[u] |= Mask{1} << v;
    rows_[v] |= Mask{1} << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet(rows_[u] & ~((Mask{2} << u) - 1)).for_each([&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::array<int, kHardVertexLimit> relabel{};
    int next = 0;
    keep.for_each([&](int v) { relabel[v] = next++; });
    Graph h(next);
    keep.for_each([&](int v) {
        (g.neighbors(v) & keep).for_each([&](int w) {
            if (v < w) h.add_edge(relabel[v], relabel[w]);
        });
    });
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

namespace families {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int m, int k) {
    Graph g(m + k);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + k; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("a wheel needs at least 4 vertices");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v + 1 < n ? v + 1 : 1);
    }
    return g;
}

Graph empty(int n) { return Graph(n); }

}  // namespace families

}  // namespace bei
