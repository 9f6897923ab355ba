#include "gammaring/abelian.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "gammaring/backtrack.hpp"
#include "indexed_ring.hpp"

namespace gammaring {

namespace detail {

Coord mod(Coord x, Coord m) {
    Coord r = x % m;
    return r < 0 ? r + m : r;
}

Coord mul_mod(Coord a, Coord b, Coord m) {
    return static_cast<Coord>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

} // namespace detail

namespace {

using detail::mod;
using detail::mul_mod;

// Generous but keeps element indices and counters in 64 bits.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

} // namespace

void Caps::check_elements(const char* what, std::uint64_t n) const {
    if (!override_caps && n > elements) throw CapExceeded(what, n, elements);
}

void Caps::check_candidates(const char* what, std::uint64_t n) const {
    if (!override_caps && n > map_candidates) throw CapExceeded(what, n, map_candidates);
}

std::string to_string(const GroupElement& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
    os << ')';
    return os.str();
}

FinAbGroup::FinAbGroup(std::vector<Coord> moduli) : moduli_(std::move(moduli)) {
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] < 2) throw ModulusOutOfRange(i, moduli_[i]);
        if (order_ > kMaxOrder / static_cast<std::uint64_t>(moduli_[i]))
            throw CapExceeded("group order", std::numeric_limits<std::uint64_t>::max(), kMaxOrder);
        order_ *= static_cast<std::uint64_t>(moduli_[i]);
    }
}

GroupElement FinAbGroup::zero() const { return {std::vector<Coord>(rank(), 0)}; }

GroupElement FinAbGroup::generator(std::size_t i) const {
    auto e = zero();
    e.coords.at(i) = 1;
    return e;
}

bool FinAbGroup::contains(const GroupElement& x) const noexcept {
    if (x.coords.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= moduli_[i]) return false;
    return true;
}

void FinAbGroup::require(const GroupElement& x, const char* what) const {
    if (x.coords.size() != rank())
        throw ShapeMismatch(std::string(what) + ": element " + to_string(x) + " has " +
                            std::to_string(x.coords.size()) + " coordinates, group " +
                            to_string(*this) + " has rank " + std::to_string(rank()));
    if (!contains(x))
        throw ShapeMismatch(std::string(what) + ": element " + to_string(x) +
                            " is not reduced in " + to_string(*this));
}

GroupElement FinAbGroup::reduce(std::vector<Coord> coords) const {
    if (coords.size() != rank())
        throw ShapeMismatch("reduce: expected " + std::to_string(rank()) + " coordinates, got " +
                            std::to_string(coords.size()));
    for (std::size_t i = 0; i < rank(); ++i) coords[i] = mod(coords[i], moduli_[i]);
    return {std::move(coords)};
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
    require(a, "add");
    require(b, "add");
    GroupElement r = a;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.coords[i] += b.coords[i];
        if (r.coords[i] >= moduli_[i]) r.coords[i] -= moduli_[i];
    }
    return r;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const {
    require(a, "neg");
    GroupElement r = a;
    for (std::size_t i = 0; i < rank(); ++i)
        if (r.coords[i] != 0) r.coords[i] = moduli_[i] - r.coords[i];
    return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement FinAbGroup::scale(Coord n, const GroupElement& a) const {
    require(a, "scale");
    GroupElement r = a;
    for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = mul_mod(n, a.coords[i], moduli_[i]);
    return r;
}

Coord FinAbGroup::order_of(const GroupElement& x) const {
    require(x, "order_of");
    Coord o = 1;
    for (std::size_t i = 0; i < rank(); ++i)
        o = std::lcm(o, moduli_[i] / std::gcd(moduli_[i], x.coords[i]));
    return o;
}

std::uint64_t FinAbGroup::index_of(const GroupElement& x) const {
    require(x, "index_of");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x.coords[i]);
    return idx;
}

GroupElement FinAbGroup::element_at(std::uint64_t index) const {
    if (index >= order_) throw ShapeMismatch("element index out of range");
    GroupElement x = zero();
    for (std::size_t i = rank(); i-- > 0;) {
        const auto d = static_cast<std::uint64_t>(moduli_[i]);
        x.coords[i] = static_cast<Coord>(index % d);
        index /= d;
    }
    return x;
}

std::string to_string(const FinAbGroup& g) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << g.modulus(i);
    os << ']';
    return os.str();
}

FinAbGroup make_group(std::vector<Coord> moduli) { return FinAbGroup(std::move(moduli)); }

GroupElement add(const FinAbGroup& g, const GroupElement& a, const GroupElement& b) { return g.add(a, b); }

GroupElement scale(const FinAbGroup& g, Coord n, const GroupElement& a) { return g.scale(n, a); }

std::vector<GroupElement> enumerate_elements(const FinAbGroup& g, const Caps& caps) {
    caps.check_elements("enumerate_elements", g.order());
    std::vector<GroupElement> out;
    out.reserve(g.order());
    GroupElement x = g.zero();
    for (std::uint64_t n = 0; n < g.order(); ++n) {
        out.push_back(x);
        for (std::size_t i = g.rank(); i-- > 0;) {
            if (++x.coords[i] < g.modulus(i)) break;
            x.coords[i] = 0;
        }
    }
    return out;
}

std::vector<GroupElement> admissible_images(const FinAbGroup& codomain, Coord modulus) {
    // y is killed by `modulus` iff each coordinate is a multiple of d_r / gcd(d_r, modulus).
    std::vector<Coord> steps(codomain.rank());
    std::vector<Coord> counts(codomain.rank());
    std::uint64_t total = 1;
    for (std::size_t r = 0; r < codomain.rank(); ++r) {
        const Coord d = codomain.modulus(r);
        steps[r] = d / std::gcd(d, modulus);
        counts[r] = d / steps[r];
        total *= static_cast<std::uint64_t>(counts[r]);
    }
    std::vector<GroupElement> out;
    out.reserve(total);
    std::vector<Coord> digit(codomain.rank(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        GroupElement y = codomain.zero();
        for (std::size_t r = 0; r < codomain.rank(); ++r) y.coords[r] = digit[r] * steps[r];
        out.push_back(std::move(y));
        for (std::size_t r = codomain.rank(); r-- > 0;) {
            if (++digit[r] < counts[r]) break;
            digit[r] = 0;
        }
    }
    return out;
}

GroupElement AdditiveMap::operator()(const GroupElement& x) const {
    domain_.require(x, "apply map");
    GroupElement r = codomain_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (x.coords[i] != 0) r = codomain_.add(r, codomain_.scale(x.coords[i], images_[i]));
    return r;
}

bool AdditiveMap::is_zero() const noexcept {
    for (const auto& y : images_)
        for (Coord c : y.coords)
            if (c != 0) return false;
    return true;
}

bool AdditiveMap::is_identity() const noexcept {
    if (!(domain_ == codomain_)) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != domain_.generator(i)) return false;
    return true;
}

std::string to_string(const AdditiveMap& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.images().size(); ++i)
        os << (i ? " " : "") << "e" << i << "->" << to_string(f.images()[i]);
    os << ']';
    return os.str();
}

AdditiveMap make_additive_map(FinAbGroup domain, FinAbGroup codomain, std::vector<GroupElement> images) {
    if (images.size() != domain.rank())
        throw ShapeMismatch("make_additive_map: " + std::to_string(images.size()) +
                            " images for a domain of rank " + std::to_string(domain.rank()));
    for (std::size_t i = 0; i < images.size(); ++i) {
        codomain.require(images[i], "make_additive_map");
        if (codomain.scale(domain.modulus(i), images[i]) != codomain.zero()) throw NotWellDefined(i);
    }
    return AdditiveMap(std::move(domain), std::move(codomain), std::move(images));
}

AdditiveMap identity_map(const FinAbGroup& g) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.generator(i));
    return make_additive_map(g, g, std::move(images));
}

AdditiveMap zero_map(const FinAbGroup& domain, const FinAbGroup& codomain) {
    return make_additive_map(domain, codomain, std::vector<GroupElement>(domain.rank(), codomain.zero()));
}

std::vector<AdditiveMap> enumerate_additive_maps(const FinAbGroup& domain, const FinAbGroup& codomain,
                                                 const PrefixPruner& pruner,
                                                 const EnumerationOptions& options) {
    std::vector<std::vector<GroupElement>> images(domain.rank());
    std::vector<std::vector<ElementIndex>> candidates(domain.rank());
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < domain.rank(); ++i) {
        images[i] = admissible_images(codomain, domain.modulus(i));
        for (std::size_t c = 0; c < images[i].size(); ++c) candidates[i].push_back(static_cast<ElementIndex>(c));
        space = space > options.caps.map_candidates ? space : space * images[i].size();
    }
    options.caps.check_candidates("additive map candidates", space);

    auto materialize = [&](std::span<const ElementIndex> choice) {
        std::vector<GroupElement> out;
        out.reserve(choice.size());
        for (std::size_t d = 0; d < choice.size(); ++d) out.push_back(images[d][choice[d]]);
        return out;
    };
    IndexPruner index_pruner;
    if (pruner)
        index_pruner = [&](std::span<const ElementIndex> prefix) {
            const auto prefix_images = materialize(prefix);
            return pruner(prefix_images);
        };

    const std::uint64_t budget = options.caps.override_caps ? std::numeric_limits<std::uint64_t>::max()
                                                            : options.caps.nodes;
    const auto found = backtrack_assignments(candidates, index_pruner, budget, options.workers);
    std::vector<AdditiveMap> maps;
    maps.reserve(found.size());
    for (const auto& choice : found) maps.push_back(make_additive_map(domain, codomain, materialize(choice)));
    return maps;
}

} // namespace gammaring
