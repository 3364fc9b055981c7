#include "bei/structure.hpp"

#include <algorithm>

namespace bei {

namespace {

// Grows `seed` to its connected component inside `allowed`.
Mask flood(const Graph& g, Mask seed, Mask allowed) {
    Mask reached = seed;
    Mask frontier = seed;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask rest = frontier; rest != 0; rest &= rest - 1) next |= g.neighbors(std::countr_zero(rest)).bits();
        next &= allowed & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

void bron_kerbosch(const Graph& g, Mask clique, Mask candidates, Mask excluded, std::vector<VertexSet>& out) {
    if (candidates == 0 && excluded == 0) {
        out.emplace_back(clique);
        return;
    }
    // Tomita pivot: the vertex covering the most candidates.
    int pivot = -1;
    int best = -1;
    for (Mask rest = candidates | excluded; rest != 0; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        int covered = std::popcount(candidates & g.neighbors(u).bits());
        if (covered > best) {
            best = covered;
            pivot = u;
        }
    }
    for (Mask rest = candidates & ~g.neighbors(pivot).bits(); rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        Mask bit = Mask{1} << v;
        Mask nv = g.neighbors(v).bits();
        bron_kerbosch(g, clique | bit, candidates & nv, excluded & nv, out);
        candidates &= ~bit;
        excluded |= bit;
    }
}

}  // namespace

int component_masks(const Graph& g, VertexSet removed, std::array<Mask, kHardVertexLimit>& out) {
    Mask remaining = g.vertices().bits() & ~removed.bits();
    int count = 0;
    while (remaining != 0) {
        Mask comp = flood(g, remaining & (~remaining + 1), remaining);
        out[count++] = comp;
        remaining &= ~comp;
    }
    return count;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
    std::array<Mask, kHardVertexLimit> buf;
    int count = component_masks(g, removed, buf);
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.emplace_back(buf[i]);
    return out;
}

int component_count(const Graph& g, VertexSet removed) {
    Mask remaining = g.vertices().bits() & ~removed.bits();
    int count = 0;
    while (remaining != 0) {
        remaining &= ~flood(g, remaining & (~remaining + 1), remaining);
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != g.order() - 1) return false;
    }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, 0, g.vertices().bits(), 0, out);
    std::sort(out.begin(), out.end(), lexicographic_less);
    return out;
}

ChordalityResult chordality(const Graph& g) {
    const int n = g.order();
    std::array<int, kHardVertexLimit> weight{};
    Mask unvisited = g.vertices().bits();
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    while (unvisited != 0) {
        int pick = -1;
        for (Mask rest = unvisited; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (pick < 0 || weight[v] > weight[pick]) pick = v;
        }
        visit.push_back(pick);
        unvisited &= ~(Mask{1} << pick);
        (g.neighbors(pick) & VertexSet(unvisited)).for_each([&](int w) { ++weight[w]; });
    }
    std::reverse(visit.begin(), visit.end());
    ChordalityResult result;
    if (is_perfect_elimination_order(g, visit)) {
        result.chordal = true;
        result.elimination_order = std::move(visit);
    }
    return result;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    Mask seen = 0;
    for (int v : order) {
        if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) return false;
        seen |= Mask{1} << v;
    }
    Mask later = g.vertices().bits();
    for (int v : order) {
        later &= ~(Mask{1} << v);
        Mask ahead = g.neighbors(v).bits() & later;
        for (Mask rest = ahead; rest != 0; rest &= rest - 1) {
            int w = std::countr_zero(rest);
            Mask others = ahead & ~(Mask{1} << w);
            if ((others & ~g.neighbors(w).bits()) != 0) return false;
        }
    }
    return true;
}

}  // namespace bei
