#include "gammaring/backtrack.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "gammaring/errors.hpp"

namespace gammaring {

namespace {

struct SharedState {
    explicit SharedState(std::size_t depth) : surviving(depth) {
        for (auto& s : surviving) s.store(0);
    }
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::vector<std::atomic<std::uint64_t>> surviving;
};

class Worker {
public:
    Worker(const std::vector<std::vector<ElementIndex>>& candidates, const IndexPruner& pruner,
           std::uint64_t budget, SharedState& shared)
        : candidates_(candidates), pruner_(pruner), budget_(budget), shared_(shared) {
        prefix_.reserve(candidates.size());
    }

    void run_top(std::size_t first, std::size_t stride) {
        const auto& top = candidates_[0];
        for (std::size_t c = first; c < top.size() && !shared_.aborted.load(std::memory_order_relaxed);
             c += stride)
            try_choice(top[c]);
    }

    std::vector<std::vector<ElementIndex>> results;

private:
    void try_choice(ElementIndex x) {
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
            shared_.aborted.store(true);
            return;
        }
        prefix_.push_back(x);
        if (!pruner_ || pruner_(prefix_)) {
            shared_.surviving[prefix_.size() - 1].fetch_add(1, std::memory_order_relaxed);
            descend();
        }
        prefix_.pop_back();
    }

    void descend() {
        if (prefix_.size() == candidates_.size()) {
            results.push_back(prefix_);
            return;
        }
        for (ElementIndex x : candidates_[prefix_.size()]) {
            if (shared_.aborted.load(std::memory_order_relaxed)) return;
            try_choice(x);
        }
    }

    const std::vector<std::vector<ElementIndex>>& candidates_;
    const IndexPruner& pruner_;
    std::uint64_t budget_;
    SharedState& shared_;
    std::vector<ElementIndex> prefix_;
};

} // namespace

std::vector<std::vector<ElementIndex>> backtrack_assignments(
    const std::vector<std::vector<ElementIndex>>& candidates, const IndexPruner& pruner,
    std::uint64_t node_budget, unsigned workers, BacktrackStats* stats) {
    if (candidates.empty()) {
        if (stats) *stats = {};
        return {{}};
    }
    SharedState shared(candidates.size());
    workers = std::max(1u, workers);
    std::vector<Worker> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(candidates, pruner, node_budget, shared);

    if (workers == 1) {
        pool[0].run_top(0, 1);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&pool, w, workers] { pool[w].run_top(w, workers); });
    }

    if (stats) {
        stats->nodes = shared.nodes.load();
        stats->surviving.clear();
        for (auto& s : shared.surviving) stats->surviving.push_back(s.load());
    }
    if (shared.aborted) {
        std::size_t depth = 0;
        std::uint64_t frontier = 0;
        for (std::size_t d = 0; d < shared.surviving.size(); ++d) {
            if (auto s = shared.surviving[d].load(); s > 0) {
                depth = d + 1;
                frontier = s;
            }
        }
        throw CapExceeded("backtracking search", node_budget + 1, node_budget, depth, frontier);
    }

    std::vector<std::vector<ElementIndex>> merged;
    for (auto& w : pool)
        merged.insert(merged.end(), std::make_move_iterator(w.results.begin()),
                      std::make_move_iterator(w.results.end()));
    if (workers > 1) std::sort(merged.begin(), merged.end());
    return merged;
}

} // namespace gammaring
