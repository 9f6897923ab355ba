#pragma once

// Index-based arithmetic shared by the analysis, map, and theorem modules.
// Elements are addressed by their lexicographic index; small instances get
// dense addition and product tables.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/backtrack.hpp"
#include "gammaring/gamma_ring.hpp"

namespace gammaring::detail {

using Idx = ElementIndex;

Coord mod(Coord x, Coord m);
Coord mul_mod(Coord a, Coord b, Coord m);

/// a alpha b from coordinates, straight from the flat tensor.
GroupElement product_from_tensor(const FinAbGroup& m, const FinAbGroup& g,
                                 std::span<const GroupElement> tensor, const GroupElement& a,
                                 const GroupElement& alpha, const GroupElement& b);

class IndexedGroup {
public:
    explicit IndexedGroup(FinAbGroup g);

    const FinAbGroup& group() const noexcept { return g_; }
    Idx order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return g_.rank(); }

    Idx add(Idx a, Idx b) const;
    Idx neg(Idx a) const;
    Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }
    Idx scale(Coord n, Idx a) const;

    Idx encode(const GroupElement& x) const;
    GroupElement decode(Idx a) const;
    Idx generator(std::size_t i) const { return static_cast<Idx>(stride_[i]); }
    Coord digit(Idx a, std::size_t i) const {
        return static_cast<Coord>((a / stride_[i]) % static_cast<std::uint64_t>(g_.modulus(i)));
    }

private:
    FinAbGroup g_;
    Idx order_;
    std::vector<std::uint64_t> stride_;
    std::vector<Idx> add_table_;
    std::vector<Idx> neg_table_;
};

class IndexedRing {
public:
    IndexedRing(const FinAbGroup& m, const FinAbGroup& g, std::vector<GroupElement> tensor);

    const IndexedGroup& m() const noexcept { return m_; }
    const IndexedGroup& g() const noexcept { return g_; }

    Idx prod(Idx a, Idx alpha, Idx b) const;
    Idx commutator(Idx a, Idx b, Idx alpha) const { return m_.sub(prod(a, alpha, b), prod(b, alpha, a)); }
    /// e_i f_j e_k as an index.
    Idx generator_product(std::size_t i, std::size_t j, std::size_t k) const;

    bool has_product_table() const noexcept { return !table_.empty(); }

private:
    IndexedGroup m_;
    IndexedGroup g_;
    std::vector<GroupElement> tensor_;
    std::vector<Idx> table_; // [(a * |Γ| + alpha) * |M| + b]
};

struct RingCache {
    std::once_flag indexed_once;
    std::unique_ptr<IndexedRing> indexed;
    std::once_flag valid_once;
    bool valid = false;
};

} // namespace gammaring::detail
