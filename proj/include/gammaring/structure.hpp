#pragma once

#include <span>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/gamma_ring.hpp"
#include "gammaring/report.hpp"

namespace gammaring {

/// An additive subgroup, stored both as its sorted element list and as the
/// generating list it was built from (each generator enlarged the span).
class Subgroup {
public:
    const FinAbGroup& parent() const noexcept { return parent_; }
    std::span<const GroupElement> elements() const noexcept { return elements_; }
    std::span<const GroupElement> generators() const noexcept { return generators_; }
    std::uint64_t order() const noexcept { return elements_.size(); }
    bool contains(const GroupElement& x) const;
    bool is_whole() const noexcept { return elements_.size() == parent_.order(); }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    friend Subgroup subgroup_generated(const FinAbGroup&, std::span<const GroupElement>, const Caps&);
    FinAbGroup parent_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
};

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const GroupElement> seeds, const Caps& caps = {});

/// x is central iff [x, e_k]_{f_j} = 0 for every generator pair.
bool is_central(const GammaRing& ring, const GroupElement& x);

/// Z(M), found with the generator criterion over every element of M.
Subgroup center(const GammaRing& ring, const Caps& caps = {});

/// Witness on failure: the first generator triple (i, k, j) with
/// [e_i, e_k]_{f_j} != 0.
VerdictReport is_commutative(const GammaRing& ring);

/// Witness on failure: the least nonzero a with a Γ M Γ a = 0.
VerdictReport is_semiprime(const GammaRing& ring, const Caps& caps = {});

/// Witness on failure: the lexicographically least pair of nonzero (a, b)
/// with a Γ M Γ b = 0.
VerdictReport is_prime(const GammaRing& ring, const Caps& caps = {}, unsigned workers = 1);

enum class IdealSide { left, right, two_sided };

/// left: M Γ U ⊆ U; right: U Γ M ⊆ U; checked on generators of M, Γ and U.
VerdictReport is_ideal(const GammaRing& ring, const Subgroup& u, IdealSide side);

} // namespace gammaring
