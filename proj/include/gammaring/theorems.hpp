#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/gamma_ring.hpp"
#include "gammaring/instances.hpp"
#include "gammaring/maps.hpp"
#include "gammaring/report.hpp"

namespace gammaring {

enum class TheoremId {
    remark_left_derivation,
    remark_center_permutation,
    thm_left_derivation_central,
    cor_prime_left_derivation,
    thm_scp_derivation,
    thm_scp_endomorphism,
    cor_prime_scp_identity,
};

inline constexpr std::array<TheoremId, 7> kAllTheorems{
    TheoremId::remark_left_derivation,   TheoremId::remark_center_permutation,
    TheoremId::thm_left_derivation_central, TheoremId::cor_prime_left_derivation,
    TheoremId::thm_scp_derivation,       TheoremId::thm_scp_endomorphism,
    TheoremId::cor_prime_scp_identity};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

struct VerifyOptions {
    Caps caps;
    unsigned workers = 1;
    /// Exhaustive identity checks above this many tuples switch to sampling
    /// (or throw CapExceeded when sampling is off).
    std::uint64_t exhaustive_tuples = std::uint64_t{1} << 27;
    bool allow_sampling = true;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 0;
    /// Largest n for exhaustive center-permutation checks.
    int exhaustive_n_max = 3;
    /// n_max used when a center-permutation check runs without one.
    int permutation_n_max = 2;
};

/// For a left derivation delta: delta([a,b]_alpha) = 0 and
/// [c,b]_beta alpha delta(a) = a alpha c beta delta(b) - c beta a alpha delta(b).
/// Throws NotLeftDerivation when delta is not one.
VerdictReport verify_remark_left_derivation(const GammaRing& ring, const AdditiveMap& delta,
                                            const VerifyOptions& options = {});

/// For central c and every n <= n_max:
///   c b_1 a_1 ... b_n a_n = a_1 b_s(1) ... a_i b_s(i) c b_s(i+1) a_{i+1} ... b_s(n) a_n
/// over all a, b, permutations s and positions i in 1..n.
VerdictReport verify_center_permutation(const GammaRing& ring, int n_max, const VerifyOptions& options = {});

/// Every left derivation maps into the center (semiprime hypothesis).
VerdictReport verify_left_derivations_central(const GammaRing& ring, const VerifyOptions& options = {});
/// Prime with a nonzero left derivation implies commutative.
VerdictReport verify_prime_left_derivation(const GammaRing& ring, const VerifyOptions& options = {});
/// Semiprime with an scp derivation implies commutative.
VerdictReport verify_scp_derivation(const GammaRing& ring, const VerifyOptions& options = {});
/// On a semiprime ring an endomorphism is scp iff sigma - id is center valued.
VerdictReport verify_scp_endomorphism(const GammaRing& ring, const VerifyOptions& options = {});
/// Noncommutative prime: the identity is the only scp endomorphism.
VerdictReport verify_prime_scp_identity(const GammaRing& ring, const VerifyOptions& options = {});

/// Dispatch by id. remark_left_derivation runs over every enumerated left
/// derivation; remark_center_permutation uses options.permutation_n_max.
VerdictReport verify_theorem(const GammaRing& ring, TheoremId id, const VerifyOptions& options = {});

/// Hypothesis a verifier's conclusion depends on, if it has one and it
/// fails on `ring` ("semiprime", "prime", "noncommutative").
std::optional<std::string> failing_hypothesis(const GammaRing& ring, TheoremId id, const Caps& caps = {});

enum class SearchTarget { left_derivation_not_central, scp_endo_defect_not_central, scp_derivation_on_noncommutative };

std::string_view to_string(SearchTarget target);
std::optional<SearchTarget> parse_search_target(std::string_view text);

struct RandomSource {
    std::uint64_t seed = 0;
    std::uint64_t count = 100;
    RecipeSpace space;
};

struct SearchConfig {
    SearchTarget target = SearchTarget::left_derivation_not_central;
    /// Instances are taken from `instances` first, then from `random`.
    std::vector<GammaRing> instances;
    std::optional<RandomSource> random;
    std::uint64_t node_budget = 1'000'000;
    unsigned workers = 1;
};

/// Drops the hypotheses and looks for the target violation instance by
/// instance. The report's verdict is false when a witness was found (it
/// carries the instance, the map and the failing tuple); a witness on an
/// instance satisfying the hypotheses is a falsification. Budget exhaustion
/// is reported through the "budget_exhausted" note, never thrown.
VerdictReport search_counterexample(const SearchConfig& config);

} // namespace gammaring
