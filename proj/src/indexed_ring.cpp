#include "indexed_ring.hpp"

#include <limits>

namespace gammaring::detail {

namespace {

constexpr std::uint64_t kAddTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kProductTableLimit = std::uint64_t{1} << 24;

} // namespace

GroupElement product_from_tensor(const FinAbGroup& m, const FinAbGroup& g,
                                 std::span<const GroupElement> tensor, const GroupElement& a,
                                 const GroupElement& alpha, const GroupElement& b) {
    m.require(a, "product");
    g.require(alpha, "product");
    m.require(b, "product");
    const std::size_t km = m.rank(), kg = g.rank();
    // Coefficient a_i alpha_j b_k is reduced modulo each target modulus,
    // which is exact because Z -> Z_d is a ring map.
    std::vector<__int128> acc(km, 0);
    for (std::size_t i = 0; i < km; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < kg; ++j) {
            if (alpha.coords[j] == 0) continue;
            for (std::size_t k = 0; k < km; ++k) {
                if (b.coords[k] == 0) continue;
                const auto& t = tensor[(i * kg + j) * km + k];
                for (std::size_t r = 0; r < km; ++r) {
                    if (t.coords[r] == 0) continue;
                    const Coord d = m.modulus(r);
                    Coord c = mul_mod(mul_mod(a.coords[i], alpha.coords[j], d), b.coords[k], d);
                    acc[r] = (acc[r] + mul_mod(c, t.coords[r], d)) % d;
                }
            }
        }
    }
    GroupElement out = m.zero();
    for (std::size_t r = 0; r < km; ++r) out.coords[r] = static_cast<Coord>(acc[r]);
    return out;
}

IndexedGroup::IndexedGroup(FinAbGroup g) : g_(std::move(g)) {
    if (g_.order() > std::numeric_limits<Idx>::max())
        throw CapExceeded("indexed group order", g_.order(), std::numeric_limits<Idx>::max());
    order_ = static_cast<Idx>(g_.order());
    stride_.assign(g_.rank(), 1);
    for (std::size_t i = g_.rank(); i-- > 1;) stride_[i - 1] = stride_[i] * static_cast<std::uint64_t>(g_.modulus(i));
    if (static_cast<std::uint64_t>(order_) * order_ <= kAddTableLimit) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        neg_table_.resize(order_);
        for (Idx a = 0; a < order_; ++a) {
            const auto x = decode(a);
            neg_table_[a] = encode(g_.neg(x));
            for (Idx b = 0; b < order_; ++b)
                add_table_[static_cast<std::size_t>(a) * order_ + b] = encode(g_.add(x, decode(b)));
        }
    }
}

Idx IndexedGroup::add(Idx a, Idx b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        Coord s = digit(a, i) + digit(b, i);
        if (s >= g_.modulus(i)) s -= g_.modulus(i);
        r += static_cast<std::uint64_t>(s) * stride_[i];
    }
    return static_cast<Idx>(r);
}

Idx IndexedGroup::neg(Idx a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        const Coord x = digit(a, i);
        r += static_cast<std::uint64_t>(x == 0 ? 0 : g_.modulus(i) - x) * stride_[i];
    }
    return static_cast<Idx>(r);
}

Idx IndexedGroup::scale(Coord n, Idx a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        r += static_cast<std::uint64_t>(mul_mod(n, digit(a, i), g_.modulus(i))) * stride_[i];
    return static_cast<Idx>(r);
}

Idx IndexedGroup::encode(const GroupElement& x) const { return static_cast<Idx>(g_.index_of(x)); }

GroupElement IndexedGroup::decode(Idx a) const { return g_.element_at(a); }

IndexedRing::IndexedRing(const FinAbGroup& m, const FinAbGroup& g, std::vector<GroupElement> tensor)
    : m_(m), g_(g), tensor_(std::move(tensor)) {
    const std::uint64_t nm = m_.order(), ng = g_.order();
    if (nm * nm * ng > kProductTableLimit) return;
    // Right multiplication by b is additive, so tabulate a alpha e_k first
    // and assemble a alpha b from b's digits.
    const std::size_t km = m_.rank();
    table_.resize(static_cast<std::size_t>(nm * ng * nm));
    std::vector<Idx> basis(km);
    for (Idx a = 0; a < nm; ++a) {
        const auto x = m_.decode(a);
        for (Idx al = 0; al < ng; ++al) {
            const auto y = g_.decode(al);
            for (std::size_t k = 0; k < km; ++k)
                basis[k] = m_.encode(product_from_tensor(m, g, tensor_, x, y, m.generator(k)));
            Idx* row = &table_[(static_cast<std::size_t>(a) * ng + al) * nm];
            for (Idx b = 0; b < nm; ++b) {
                Idx acc = 0;
                for (std::size_t k = 0; k < km; ++k)
                    if (Coord c = m_.digit(b, k); c != 0) acc = m_.add(acc, m_.scale(c, basis[k]));
                row[b] = acc;
            }
        }
    }
}

Idx IndexedRing::prod(Idx a, Idx alpha, Idx b) const {
    if (!table_.empty())
        return table_[(static_cast<std::size_t>(a) * g_.order() + alpha) * m_.order() + b];
    return m_.encode(product_from_tensor(m_.group(), g_.group(), tensor_, m_.decode(a), g_.decode(alpha),
                                         m_.decode(b)));
}

Idx IndexedRing::generator_product(std::size_t i, std::size_t j, std::size_t k) const {
    return m_.encode(tensor_[(i * g_.rank() + j) * m_.rank() + k]);
}

} // namespace gammaring::detail
