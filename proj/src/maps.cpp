#include "gammaring/maps.hpp"

#include <algorithm>
#include <limits>

#include "gammaring/backtrack.hpp"
#include "gammaring/structure.hpp"
#include "indexed_ring.hpp"

namespace gammaring {

namespace {

using detail::Idx;
using detail::IndexedRing;

constexpr std::array<std::string_view, kAllRoles.size()> kRoleNames{
    "left_derivation", "right_derivation", "derivation", "endomorphism", "additive_only"};

// A generator triple (e_i, f_j, e_k) together with the digits of its
// product, which is all f(e_i f_j e_k) needs.
struct Triple {
    std::size_t i, j, k;
    Idx product;
    std::vector<std::pair<std::size_t, Coord>> digits;
    std::size_t ready; // prefix length at which the role identity is decidable
};

std::vector<Triple> generator_triples(const IndexedRing& r) {
    std::vector<Triple> out;
    const std::size_t km = r.m().rank(), kg = r.g().rank();
    for (std::size_t i = 0; i < km; ++i)
        for (std::size_t j = 0; j < kg; ++j)
            for (std::size_t k = 0; k < km; ++k) {
                Triple t{i, j, k, r.generator_product(i, j, k), {}, std::max(i, k) + 1};
                for (std::size_t d = 0; d < km; ++d)
                    if (Coord c = r.m().digit(t.product, d); c != 0) {
                        t.digits.emplace_back(d, c);
                        t.ready = std::max(t.ready, d + 1);
                    }
                out.push_back(std::move(t));
            }
    return out;
}

Idx apply_digits(const IndexedRing& r, std::span<const Idx> images,
                 std::span<const std::pair<std::size_t, Coord>> digits) {
    Idx acc = 0;
    for (const auto& [d, c] : digits) acc = r.m().add(acc, r.m().scale(c, images[d]));
    return acc;
}

Idx role_residual(const IndexedRing& r, MapRole role, std::span<const Idx> img, const Triple& t) {
    const auto& m = r.m();
    const Idx x = m.generator(t.i), y = m.generator(t.k), al = r.g().generator(t.j);
    const Idx lhs = apply_digits(r, img, t.digits);
    Idx rhs = 0;
    switch (role) {
    case MapRole::left_derivation:
        rhs = m.add(r.prod(x, al, img[t.k]), r.prod(y, al, img[t.i]));
        break;
    case MapRole::right_derivation:
        rhs = m.add(r.prod(img[t.k], al, x), r.prod(img[t.i], al, y));
        break;
    case MapRole::derivation:
        rhs = m.add(r.prod(img[t.i], al, y), r.prod(x, al, img[t.k]));
        break;
    case MapRole::endomorphism:
        rhs = r.prod(img[t.i], al, img[t.k]);
        break;
    case MapRole::additive_only:
        return 0;
    }
    return m.sub(lhs, rhs);
}

Idx scp_residual(const IndexedRing& r, std::span<const Idx> img, const Triple& t) {
    const Idx x = r.m().generator(t.i), y = r.m().generator(t.k), al = r.g().generator(t.j);
    return r.m().sub(r.commutator(img[t.i], img[t.k], al), r.commutator(x, y, al));
}

std::vector<Idx> image_indices(const IndexedRing& r, const AdditiveMap& f) {
    std::vector<Idx> out;
    for (const auto& y : f.images()) out.push_back(r.m().encode(y));
    return out;
}

void require_self_map(const GammaRing& ring, const AdditiveMap& f, const char* what) {
    if (!(f.domain() == ring.m()) || !(f.codomain() == ring.m()))
        throw ShapeMismatch(std::string(what) + ": map is not a self-map of M");
}

} // namespace

std::string_view to_string(MapRole role) { return kRoleNames[static_cast<std::size_t>(role)]; }

std::optional<MapRole> parse_map_role(std::string_view text) {
    for (std::size_t r = 0; r < kRoleNames.size(); ++r) {
        if (kRoleNames[r] == text) return kAllRoles[r];
        // Accept dashes as in CLI flags.
        std::string dashed(kRoleNames[r]);
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        if (dashed == text) return kAllRoles[r];
    }
    return std::nullopt;
}

VerdictReport check_role(const GammaRing& ring, const AdditiveMap& f, MapRole role) {
    require_validated(ring);
    require_self_map(ring, f, "check_role");
    const auto& r = detail::indexed(ring);
    const auto img = image_indices(r, f);
    VerdictReport report;
    if (role == MapRole::additive_only) return report;
    for (const auto& t : generator_triples(r)) {
        report.count("generator_triples");
        if (const Idx res = role_residual(r, role, img, t); res != 0) {
            report.fail(Witness{std::string(to_string(role))}
                            .with("x", ring.m().generator(t.i))
                            .with("alpha", ring.gamma().generator(t.j))
                            .with("y", ring.m().generator(t.k))
                            .with("residual", r.m().decode(res)));
            break;
        }
    }
    return report;
}

RoleVerdicts classify_map(const GammaRing& ring, const AdditiveMap& f) {
    RoleVerdicts out;
    for (MapRole role : kAllRoles) out[role] = check_role(ring, f, role);
    return out;
}

VerdictReport is_scp(const GammaRing& ring, const AdditiveMap& f) {
    require_validated(ring);
    require_self_map(ring, f, "is_scp");
    const auto& r = detail::indexed(ring);
    const auto img = image_indices(r, f);
    VerdictReport report;
    for (const auto& t : generator_triples(r)) {
        report.count("generator_triples");
        if (scp_residual(r, img, t) != 0) {
            const auto& m = ring.m();
            const auto al = ring.gamma().generator(t.j);
            report.fail(Witness{"scp"}
                            .with("x", m.generator(t.i))
                            .with("alpha", al)
                            .with("y", m.generator(t.k))
                            .with("image_commutator", commutator(ring, f.image(t.i), f.image(t.k), al))
                            .with("commutator", commutator(ring, m.generator(t.i), m.generator(t.k), al)));
            break;
        }
    }
    return report;
}

VerdictReport image_in_center(const GammaRing& ring, const AdditiveMap& f) {
    require_validated(ring);
    require_self_map(ring, f, "image_in_center");
    const auto& m = ring.m();
    const auto& g = ring.gamma();
    VerdictReport report;
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t k = 0; k < m.rank(); ++k)
            for (std::size_t j = 0; j < g.rank(); ++j) {
                report.count("generator_checks");
                const auto value = commutator(ring, f.image(i), m.generator(k), g.generator(j));
                if (value != m.zero()) {
                    report.fail(Witness{"noncentral_image"}
                                    .with("generator", static_cast<Coord>(i))
                                    .with("image", f.image(i))
                                    .with("b", m.generator(k))
                                    .with("alpha", g.generator(j))
                                    .with("value", value));
                    return report;
                }
            }
    return report;
}

MapEnumeration enumerate_maps(const GammaRing& ring, MapRole role, const MapSearchOptions& options) {
    require_validated(ring);
    const auto& r = detail::indexed(ring);
    const auto& m = ring.m();
    const std::size_t km = m.rank();

    std::vector<std::vector<Idx>> candidates(km);
    if (options.image_candidates) {
        if (options.image_candidates->size() != km)
            throw ShapeMismatch("enumerate_maps: one candidate list per generator required");
        for (std::size_t i = 0; i < km; ++i)
            for (const auto& y : (*options.image_candidates)[i]) {
                if (m.scale(m.modulus(i), y) != m.zero()) throw NotWellDefined(i);
                candidates[i].push_back(r.m().encode(y));
            }
    } else {
        for (std::size_t i = 0; i < km; ++i)
            for (const auto& y : admissible_images(m, m.modulus(i))) candidates[i].push_back(r.m().encode(y));
    }

    // Constraints grouped by the prefix length at which they become decidable.
    const auto triples = generator_triples(r);
    std::vector<std::vector<const Triple*>> role_at(km + 1), scp_at(km + 1);
    for (const auto& t : triples) {
        if (role != MapRole::additive_only) role_at[t.ready].push_back(&t);
        if (options.require_scp) scp_at[std::max(t.i, t.k) + 1].push_back(&t);
    }

    const IndexPruner pruner = [&](std::span<const Idx> prefix) {
        const std::size_t depth = prefix.size();
        for (const Triple* t : scp_at[depth])
            if (scp_residual(r, prefix, *t) != 0) return false;
        for (const Triple* t : role_at[depth])
            if (role_residual(r, role, prefix, *t) != 0) return false;
        return true;
    };

    BacktrackStats stats;
    const auto found = backtrack_assignments(candidates, pruner, options.caps.nodes, options.workers, &stats);
    MapEnumeration out;
    out.nodes = stats.nodes;
    for (const auto& choice : found) {
        std::vector<GroupElement> images;
        for (Idx y : choice) images.push_back(r.m().decode(y));
        out.maps.push_back(make_additive_map(m, m, std::move(images)));
    }
    return out;
}

DefectMap defect_map(const GammaRing& ring, const AdditiveMap& sigma) {
    require_validated(ring);
    require_self_map(ring, sigma, "defect_map");
    const auto& m = ring.m();
    std::vector<GroupElement> zeta;
    bool central = true;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        zeta.push_back(m.sub(sigma.image(i), m.generator(i)));
        central = central && is_central(ring, zeta.back());
    }
    return DefectMap{sigma, make_additive_map(m, m, std::move(zeta)), central};
}

} // namespace gammaring
