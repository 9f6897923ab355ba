#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gammaring/errors.hpp"

namespace gammaring {

using Coord = std::int64_t;

/// Limits on exhaustive work. Every exhaustive loop checks its size against
/// one of these before starting; `override_caps` lifts the element and
/// candidate caps but never the node budget of a pruned search.
struct Caps {
    std::uint64_t elements = std::uint64_t{1} << 16;
    std::uint64_t map_candidates = std::uint64_t{1} << 26;
    std::uint64_t nodes = std::uint64_t{1} << 26;
    bool override_caps = false;

    void check_elements(const char* what, std::uint64_t n) const;
    void check_candidates(const char* what, std::uint64_t n) const;
};

/// Coordinates of an element with respect to the canonical generators of
/// its group. Reduced: coords[i] lies in [0, d_i).
struct GroupElement {
    std::vector<Coord> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& x);

/// A finite abelian group Z_{d_1} x ... x Z_{d_k}. The moduli need not form
/// a divisibility chain. Elements are indexed in lexicographic coordinate
/// order (last coordinate fastest), so index 0 is the zero element.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<Coord> moduli);

    std::span<const Coord> moduli() const noexcept { return moduli_; }
    Coord modulus(std::size_t i) const { return moduli_.at(i); }
    std::size_t rank() const noexcept { return moduli_.size(); }
    std::uint64_t order() const noexcept { return order_; }

    GroupElement zero() const;
    GroupElement generator(std::size_t i) const;

    /// True when `x` has the right length and reduced coordinates.
    bool contains(const GroupElement& x) const noexcept;
    /// Reduces arbitrary integer coordinates; throws ShapeMismatch on length.
    GroupElement reduce(std::vector<Coord> coords) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(Coord n, const GroupElement& a) const;

    /// Additive order of `x`.
    Coord order_of(const GroupElement& x) const;

    std::uint64_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::uint64_t index) const;

    void require(const GroupElement& x, const char* what) const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.moduli_ == b.moduli_; }

private:
    std::vector<Coord> moduli_;
    std::uint64_t order_ = 1;
};

std::string to_string(const FinAbGroup& g);

FinAbGroup make_group(std::vector<Coord> moduli);
GroupElement add(const FinAbGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement scale(const FinAbGroup& g, Coord n, const GroupElement& a);
std::vector<GroupElement> enumerate_elements(const FinAbGroup& g, const Caps& caps = {});

/// {y in codomain : modulus * y = 0}, in canonical order. These are the
/// admissible images of a generator of order `modulus`.
std::vector<GroupElement> admissible_images(const FinAbGroup& codomain, Coord modulus);

/// A homomorphism between finite abelian groups, stored as the images of the
/// domain's canonical generators.
class AdditiveMap {
public:
    const FinAbGroup& domain() const noexcept { return domain_; }
    const FinAbGroup& codomain() const noexcept { return codomain_; }
    std::span<const GroupElement> images() const noexcept { return images_; }
    const GroupElement& image(std::size_t i) const { return images_.at(i); }

    GroupElement operator()(const GroupElement& x) const;

    bool is_zero() const noexcept;
    bool is_identity() const noexcept;

    friend bool operator==(const AdditiveMap&, const AdditiveMap&) = default;

private:
    friend AdditiveMap make_additive_map(FinAbGroup, FinAbGroup, std::vector<GroupElement>);
    AdditiveMap(FinAbGroup d, FinAbGroup c, std::vector<GroupElement> images)
        : domain_(std::move(d)), codomain_(std::move(c)), images_(std::move(images)) {}

    FinAbGroup domain_;
    FinAbGroup codomain_;
    std::vector<GroupElement> images_;
};

std::string to_string(const AdditiveMap& f);

/// Throws ShapeMismatch on a wrong image count or foreign image, and
/// NotWellDefined(i) when d_i * images[i] != 0.
AdditiveMap make_additive_map(FinAbGroup domain, FinAbGroup codomain,
                              std::vector<GroupElement> images);
AdditiveMap identity_map(const FinAbGroup& g);
AdditiveMap zero_map(const FinAbGroup& domain, const FinAbGroup& codomain);

/// Called after each generator image is fixed with the assigned prefix;
/// returning false cuts the subtree.
using PrefixPruner = std::function<bool(std::span<const GroupElement>)>;

struct EnumerationOptions {
    Caps caps;
    unsigned workers = 1;
};

/// Every additive map domain -> codomain surviving `pruner` (all of them for
/// an empty pruner), in lexicographic order of the image tuple.
std::vector<AdditiveMap> enumerate_additive_maps(const FinAbGroup& domain, const FinAbGroup& codomain,
                                                 const PrefixPruner& pruner = {},
                                                 const EnumerationOptions& options = {});

} // namespace gammaring
