#ifndef BEI_VERIFY_HPP
#define BEI_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Calls fn(const Graph&) for each of the 2^(n(n-1)/2) labelled graphs on n
/// vertices. The code's bits follow graph6 edge order.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        Graph g(n);
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((code >> b) & 1U) g.add_edge(slots[b].first, slots[b].second);
        }
        fn(g);
    }
}

struct PropertyOutcome {
    std::string name;
    std::uint64_t checked = 0;
    /// At most a handful of failures, each "graph6: detail".
    std::vector<std::string> failures;
    std::uint64_t failure_count = 0;

    bool passed() const { return failure_count == 0; }
};

inline constexpr int kVerifyMinVertices = 3;
inline constexpr int kVerifyMaxVertices = 7;

/// Runs every cross-module property over all labelled graphs with at most
/// `max_n` vertices (plus fixed families). Throws std::invalid_argument
/// unless kVerifyMinVertices <= max_n <= kVerifyMaxVertices.
/// `progress`, when set, is called once per finished vertex count.
std::vector<PropertyOutcome> run_property_suite(int max_n, const std::function<void(int)>& progress = {});

}  // namespace bei

#endif  // BEI_VERIFY_HPP
