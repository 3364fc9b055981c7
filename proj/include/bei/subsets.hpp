#ifndef BEI_SUBSETS_HPP
#define BEI_SUBSETS_HPP

#include <cstdint>

#include "bei/graph.hpp"

namespace bei {

/// Calls fn(VertexSet) for every k-subset of {0..n-1} in increasing bitmask
/// order (Gosper's hack). Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return true;
    if (k == 0) return fn(VertexSet{});
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < limit) {
        if (!fn(VertexSet(static_cast<Mask>(s)))) return false;
        std::uint64_t low = s & (~s + 1);
        std::uint64_t ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    return true;
}

/// Calls fn(VertexSet) for every subset of {0..n-1} in increasing bitmask order.
template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) fn(VertexSet(static_cast<Mask>(s)));
}

}  // namespace bei

#endif  // BEI_SUBSETS_HPP
