#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gammaring {

using ElementIndex = std::uint32_t;

struct BacktrackStats {
    std::uint64_t nodes = 0;
    /// surviving[d] = partial assignments of length d+1 the pruner kept.
    std::vector<std::uint64_t> surviving;
};

/// Sees the assigned prefix (length >= 1); false cuts the subtree. Must be
/// safe to call concurrently when workers > 1.
using IndexPruner = std::function<bool(std::span<const ElementIndex>)>;

/// Depth-first search over tuples (x_0, ..., x_{k-1}) with x_d drawn from
/// candidates[d] in order. Every tried assignment counts as one node; going
/// past `node_budget` throws CapExceeded carrying the deepest frontier
/// reached. With several workers the top-level choices are dealt
/// round-robin; the merged result is re-sorted, which matches the
/// single-worker order whenever every candidate list is ascending.
std::vector<std::vector<ElementIndex>> backtrack_assignments(
    const std::vector<std::vector<ElementIndex>>& candidates, const IndexPruner& pruner,
    std::uint64_t node_budget, unsigned workers = 1, BacktrackStats* stats = nullptr);

} // namespace gammaring
