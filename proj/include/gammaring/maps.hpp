#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/gamma_ring.hpp"
#include "gammaring/report.hpp"

namespace gammaring {

/// Defining identities, checked for all x, y in M and alpha in Γ:
///   left_derivation   f(x alpha y) = x alpha f(y) + y alpha f(x)
///   right_derivation  f(x alpha y) = f(y) alpha x + f(x) alpha y
///   derivation        f(x alpha y) = f(x) alpha y + x alpha f(y)
///   endomorphism      f(x alpha y) = f(x) alpha f(y)
///   additive_only     no condition
/// Roles are predicates; a map may hold several.
enum class MapRole { left_derivation, right_derivation, derivation, endomorphism, additive_only };

inline constexpr std::array<MapRole, 5> kAllRoles{MapRole::left_derivation, MapRole::right_derivation,
                                                  MapRole::derivation, MapRole::endomorphism,
                                                  MapRole::additive_only};

std::string_view to_string(MapRole role);
std::optional<MapRole> parse_map_role(std::string_view text);

struct RoleVerdicts {
    std::array<VerdictReport, kAllRoles.size()> reports;

    const VerdictReport& operator[](MapRole role) const { return reports[static_cast<std::size_t>(role)]; }
    VerdictReport& operator[](MapRole role) { return reports[static_cast<std::size_t>(role)]; }
};

/// Checks one role on all generator triples (e_i, f_j, e_k). That suffices:
/// once f is additive every residual is additive in each slot.
VerdictReport check_role(const GammaRing& ring, const AdditiveMap& f, MapRole role);
RoleVerdicts classify_map(const GammaRing& ring, const AdditiveMap& f);

/// [f(x), f(y)]_alpha = [x, y]_alpha for all x, y, alpha; generator triples
/// suffice since both sides are biadditive in (x, y) and additive in alpha.
VerdictReport is_scp(const GammaRing& ring, const AdditiveMap& f);

/// f(M) ⊆ Z(M), i.e. every generator image is central.
VerdictReport image_in_center(const GammaRing& ring, const AdditiveMap& f);

struct MapSearchOptions {
    Caps caps{};
    unsigned workers = 1;
    /// Also impose the scp identity during the search.
    bool require_scp = false;
    /// Restricts generator i's image to image_candidates[i] (ascending,
    /// each admissible) instead of every admissible image.
    std::optional<std::vector<std::vector<GroupElement>>> image_candidates{};
};

struct MapEnumeration {
    std::vector<AdditiveMap> maps;
    std::uint64_t nodes = 0;
};

/// All additive self-maps of M holding `role`, by backtracking over
/// generator images. Each generator-triple constraint is checked at the
/// first depth where every image it references is assigned, including the
/// images needed to expand f(e_i f_j e_k) by additivity. Lexicographic order
/// of the image tuple. Throws CapExceeded past `caps.nodes` search nodes.
MapEnumeration enumerate_maps(const GammaRing& ring, MapRole role, const MapSearchOptions& options = {});

/// sigma = id + zeta with zeta(x) = sigma(x) - x.
struct DefectMap {
    AdditiveMap base;
    AdditiveMap defect;
    bool central = false;
};

DefectMap defect_map(const GammaRing& ring, const AdditiveMap& sigma);

} // namespace gammaring
