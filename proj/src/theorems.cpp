#include "gammaring/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gammaring/structure.hpp"
#include "indexed_ring.hpp"

namespace gammaring {

namespace {

using detail::Idx;
using detail::IndexedRing;

constexpr std::array<std::string_view, kAllTheorems.size()> kTheoremNames{
    "remark_left_derivation", "remark_center_permutation", "thm_left_derivation_central",
    "cor_prime_left_derivation", "thm_scp_derivation", "thm_scp_endomorphism", "cor_prime_scp_identity"};

constexpr std::array<std::string_view, 3> kTargetNames{
    "left_derivation_not_central", "scp_endo_defect_not_central", "scp_derivation_on_noncommutative"};

template <std::size_t N>
std::optional<std::size_t> lookup_name(const std::array<std::string_view, N>& names, std::string_view text) {
    for (std::size_t i = 0; i < N; ++i) {
        std::string dashed(names[i]);
        std::replace(dashed.begin(), dashed.end(), '_', '-');
        if (names[i] == text || dashed == text) return i;
    }
    return std::nullopt;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) out = sat_mul(out, base);
    return out;
}

Idx draw(std::mt19937_64& rng, std::uint64_t n) { return static_cast<Idx>(rng() % n); }

// f on every element of M, by expansion over the generator images.
std::vector<Idx> map_table(const IndexedRing& r, const AdditiveMap& f) {
    const auto& m = r.m();
    std::vector<Idx> img;
    for (const auto& y : f.images()) img.push_back(m.encode(y));
    std::vector<Idx> out(m.order());
    for (Idx x = 0; x < m.order(); ++x) {
        Idx acc = 0;
        for (std::size_t d = 0; d < m.rank(); ++d) acc = m.add(acc, m.scale(m.digit(x, d), img[d]));
        out[x] = acc;
    }
    return out;
}

Witness map_witness(std::string kind, const AdditiveMap& f) {
    Witness w{std::move(kind)};
    for (std::size_t i = 0; i < f.images().size(); ++i) w.with("image_e" + std::to_string(i), f.image(i));
    return w;
}

// Appends the values of `inner` to `outer`, prefixing each name.
Witness& absorb(Witness& outer, const Witness& inner, const std::string& prefix) {
    for (const auto& v : inner.values) outer.values.push_back({prefix + v.name, v.coords});
    return outer;
}

MapSearchOptions search_options(const VerifyOptions& o, bool scp = false) {
    MapSearchOptions s;
    s.caps = o.caps;
    s.workers = o.workers;
    s.require_scp = scp;
    return s;
}

// Decides exhaustive vs sampled mode for a check of `tuples` tuples.
bool use_sampling(const VerifyOptions& o, std::uint64_t tuples, const char* what) {
    if (tuples <= o.exhaustive_tuples) return false;
    if (!o.allow_sampling) throw CapExceeded(what, tuples, o.exhaustive_tuples);
    return true;
}

class RemarkOneChecker {
public:
    RemarkOneChecker(const GammaRing& ring, const AdditiveMap& delta)
        : r_(detail::indexed(ring)), delta_(map_table(r_, delta)) {}

    // delta([a,b]_alpha)
    Idx kill(Idx a, Idx b, Idx al) const { return delta_[r_.commutator(a, b, al)]; }

    // [c,b]_beta alpha delta(a) - (a alpha c beta delta(b) - c beta a alpha delta(b))
    Idx five(Idx a, Idx b, Idx c, Idx al, Idx be) const {
        const auto& m = r_.m();
        const Idx lhs = r_.prod(r_.commutator(c, b, be), al, delta_[a]);
        const Idx db = delta_[b];
        const Idx rhs = m.sub(r_.prod(r_.prod(a, al, c), be, db), r_.prod(r_.prod(c, be, a), al, db));
        return m.sub(lhs, rhs);
    }

    Witness kill_witness(Idx a, Idx b, Idx al) const {
        return Witness{"delta_of_commutator"}
            .with("a", dec(a))
            .with("b", dec(b))
            .with("alpha", decg(al))
            .with("value", dec(kill(a, b, al)));
    }
    Witness five_witness(Idx a, Idx b, Idx c, Idx al, Idx be) const {
        return Witness{"five_term_identity"}
            .with("a", dec(a))
            .with("b", dec(b))
            .with("c", dec(c))
            .with("alpha", decg(al))
            .with("beta", decg(be))
            .with("residual", dec(five(a, b, c, al, be)));
    }

private:
    GroupElement dec(Idx x) const { return r_.m().decode(x); }
    GroupElement decg(Idx x) const { return r_.g().decode(x); }

    const IndexedRing& r_;
    std::vector<Idx> delta_;
};

// Folds x_0 b_0 x_1 b_1 ... x_n left to right.
Idx fold(const IndexedRing& r, Idx first, std::span<const Idx> betas, std::span<const Idx> rest) {
    Idx acc = first;
    for (std::size_t t = 0; t < betas.size(); ++t) acc = r.prod(acc, betas[t], rest[t]);
    return acc;
}

struct PermutationCase {
    std::vector<Idx> a, beta, sigma;
    Idx c;
    std::size_t i;
};

// RHS - LHS of the rearrangement identity; fills `scratch` buffers.
Idx permutation_residual(const IndexedRing& r, const PermutationCase& pc, std::vector<Idx>& betas,
                         std::vector<Idx>& rest) {
    const std::size_t n = pc.a.size();
    betas.resize(n);
    rest.resize(n);
    for (std::size_t t = 0; t < n; ++t) betas[t] = pc.beta[pc.sigma[t]];
    // Elements after a_1: a_2..a_i, c, a_{i+1}..a_n.
    std::size_t w = 0;
    for (std::size_t t = 1; t < pc.i; ++t) rest[w++] = pc.a[t];
    rest[w++] = pc.c;
    for (std::size_t t = pc.i; t < n; ++t) rest[w++] = pc.a[t];
    const Idx rhs = fold(r, pc.a[0], betas, rest);
    const Idx lhs = fold(r, pc.c, pc.beta, pc.a);
    return r.m().sub(rhs, lhs);
}

Witness permutation_witness(const IndexedRing& r, const PermutationCase& pc, Idx residual) {
    Witness w{"center_permutation"};
    w.with("n", static_cast<Coord>(pc.a.size()));
    w.with("c", r.m().decode(pc.c));
    for (std::size_t t = 0; t < pc.a.size(); ++t) w.with("a" + std::to_string(t + 1), r.m().decode(pc.a[t]));
    for (std::size_t t = 0; t < pc.beta.size(); ++t)
        w.with("beta" + std::to_string(t + 1), r.g().decode(pc.beta[t]));
    for (std::size_t t = 0; t < pc.sigma.size(); ++t)
        w.with("sigma" + std::to_string(t + 1), static_cast<Coord>(pc.sigma[t] + 1));
    w.with("i", static_cast<Coord>(pc.i));
    w.with("residual", r.m().decode(residual));
    return w;
}

bool advance(std::vector<Idx>& digits, Idx radix) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (++digits[t] < radix) return true;
        digits[t] = 0;
    }
    return false;
}

} // namespace

std::string_view to_string(TheoremId id) { return kTheoremNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
    if (auto i = lookup_name(kTheoremNames, text)) return kAllTheorems[*i];
    return std::nullopt;
}

std::string_view to_string(SearchTarget target) { return kTargetNames[static_cast<std::size_t>(target)]; }

std::optional<SearchTarget> parse_search_target(std::string_view text) {
    if (auto i = lookup_name(kTargetNames, text)) return static_cast<SearchTarget>(*i);
    return std::nullopt;
}

VerdictReport verify_remark_left_derivation(const GammaRing& ring, const AdditiveMap& delta,
                                            const VerifyOptions& options) {
    require_validated(ring);
    if (!check_role(ring, delta, MapRole::left_derivation)) throw NotLeftDerivation("verify_remark_left_derivation: map is not a left derivation");
    options.caps.check_elements("remark_left_derivation", ring.m().order());

    const auto& r = detail::indexed(ring);
    const RemarkOneChecker check(ring, delta);
    const Idx nm = r.m().order(), ng = r.g().order();
    VerdictReport report;
    std::mt19937_64 rng(options.seed);
    bool sampled = false;

    // delta([a,b]_alpha) = 0
    const std::uint64_t pairs = sat_mul(sat_mul(nm, nm), ng);
    if (use_sampling(options, pairs, "remark_left_derivation pairs")) {
        sampled = true;
        for (std::uint64_t s = 0; s < options.sample_count; ++s) {
            const Idx a = draw(rng, nm), b = draw(rng, nm), al = draw(rng, ng);
            report.count("sampled_pairs");
            if (check.kill(a, b, al) != 0) {
                report.fail(check.kill_witness(a, b, al));
                break;
            }
        }
    } else {
        for (Idx a = 0; a < nm && report; ++a)
            for (Idx b = 0; b < nm && report; ++b)
                for (Idx al = 0; al < ng; ++al) {
                    report.count("pairs");
                    if (check.kill(a, b, al) != 0) {
                        report.fail(check.kill_witness(a, b, al));
                        break;
                    }
                }
    }

    // [c,b]_beta alpha delta(a) = a alpha c beta delta(b) - c beta a alpha delta(b)
    const std::uint64_t tuples = sat_mul(sat_pow(nm, 3), sat_mul(ng, ng));
    if (use_sampling(options, tuples, "remark_left_derivation tuples")) {
        sampled = true;
        for (std::uint64_t s = 0; s < options.sample_count && report; ++s) {
            const Idx a = draw(rng, nm), b = draw(rng, nm), c = draw(rng, nm);
            const Idx al = draw(rng, ng), be = draw(rng, ng);
            report.count("sampled_tuples");
            if (check.five(a, b, c, al, be) != 0) report.fail(check.five_witness(a, b, c, al, be));
        }
    } else {
        for (Idx a = 0; a < nm && report; ++a)
            for (Idx b = 0; b < nm && report; ++b)
                for (Idx c = 0; c < nm && report; ++c)
                    for (Idx al = 0; al < ng && report; ++al)
                        for (Idx be = 0; be < ng; ++be) {
                            report.count("tuples");
                            if (check.five(a, b, c, al, be) != 0) {
                                report.fail(check.five_witness(a, b, c, al, be));
                                break;
                            }
                        }
    }
    if (sampled) report.seed = options.seed;
    if (!report) report.falsification = true;
    return report;
}

VerdictReport verify_center_permutation(const GammaRing& ring, int n_max, const VerifyOptions& options) {
    require_validated(ring);
    if (n_max < 1) throw GammaError("verify_center_permutation: n_max must be at least 1");
    const auto& r = detail::indexed(ring);
    const auto z = center(ring, options.caps);
    std::vector<Idx> zc;
    for (const auto& c : z.elements()) zc.push_back(r.m().encode(c));

    const Idx nm = r.m().order(), ng = r.g().order();
    VerdictReport report;
    report.count("center_order", zc.size());
    std::mt19937_64 rng(options.seed);
    std::vector<Idx> betas, rest;

    for (int n = 1; n <= n_max && report; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::uint64_t perms = 1;
        for (int t = 2; t <= n; ++t) perms *= static_cast<std::uint64_t>(t);
        const std::uint64_t cases = sat_mul(sat_mul(zc.size(), sat_mul(sat_pow(nm, n), sat_pow(ng, n))),
                                            sat_mul(perms, un));
        const bool sample = n > options.exhaustive_n_max || cases > options.exhaustive_tuples;
        if (sample && !options.allow_sampling)
            throw CapExceeded("verify_center_permutation", cases, options.exhaustive_tuples);
        const std::string key = "n" + std::to_string(n) + (sample ? "_sampled" : "_checks");

        PermutationCase pc{std::vector<Idx>(un, 0), std::vector<Idx>(un, 0), std::vector<Idx>(un), 0, 1};
        if (sample) {
            report.seed = options.seed;
            for (std::uint64_t s = 0; s < options.sample_count; ++s) {
                pc.c = zc[draw(rng, zc.size())];
                for (auto& x : pc.a) x = draw(rng, nm);
                for (auto& x : pc.beta) x = draw(rng, ng);
                std::iota(pc.sigma.begin(), pc.sigma.end(), 0);
                std::shuffle(pc.sigma.begin(), pc.sigma.end(), rng);
                pc.i = 1 + draw(rng, un);
                report.count(key);
                if (const Idx res = permutation_residual(r, pc, betas, rest); res != 0) {
                    report.fail(permutation_witness(r, pc, res));
                    break;
                }
            }
            continue;
        }
        std::vector<Idx> a(un, 0), beta(un, 0);
        do {
            pc.beta = beta;
            do {
                pc.a = a;
                for (Idx c : zc) {
                    pc.c = c;
                    std::iota(pc.sigma.begin(), pc.sigma.end(), 0);
                    do {
                        for (pc.i = 1; pc.i <= un; ++pc.i) {
                            report.count(key);
                            if (const Idx res = permutation_residual(r, pc, betas, rest); res != 0) {
                                report.fail(permutation_witness(r, pc, res));
                                goto done;
                            }
                        }
                    } while (std::next_permutation(pc.sigma.begin(), pc.sigma.end()));
                }
            } while (advance(a, nm));
        } while (advance(beta, ng));
    done:;
    }
    if (!report) report.falsification = true;
    return report;
}

VerdictReport verify_left_derivations_central(const GammaRing& ring, const VerifyOptions& options) {
    require_validated(ring);
    VerdictReport report;
    const bool semiprime = is_semiprime(ring, options.caps).verdict;
    report.note("semiprime", semiprime);
    const auto found = enumerate_maps(ring, MapRole::left_derivation, search_options(options));
    report.count("nodes", found.nodes);
    report.count("left_derivations", found.maps.size());
    for (const auto& delta : found.maps) {
        const auto central = image_in_center(ring, delta);
        if (!central) {
            auto w = map_witness("left_derivation_not_central", delta);
            report.fail(absorb(w, central.witnesses.front(), ""));
            report.falsification = semiprime;
            break;
        }
    }
    return report;
}

VerdictReport verify_prime_left_derivation(const GammaRing& ring, const VerifyOptions& options) {
    require_validated(ring);
    VerdictReport report;
    const bool prime = is_prime(ring, options.caps, options.workers).verdict;
    const auto commutative = is_commutative(ring);
    report.note("prime", prime);
    report.note("commutative", commutative.verdict);
    if (!prime) {
        report.notes.push_back("vacuous: not prime");
        return report;
    }
    const auto found = enumerate_maps(ring, MapRole::left_derivation, search_options(options));
    report.count("nodes", found.nodes);
    report.count("left_derivations", found.maps.size());
    for (const auto& delta : found.maps) {
        if (delta.is_zero()) continue;
        report.count("nonzero_left_derivations");
        if (!commutative) {
            auto w = map_witness("nonzero_left_derivation_on_noncommutative", delta);
            report.fail(absorb(w, commutative.witnesses.front(), "noncommuting_"));
            report.falsification = true;
            break;
        }
    }
    return report;
}

VerdictReport verify_scp_derivation(const GammaRing& ring, const VerifyOptions& options) {
    require_validated(ring);
    VerdictReport report;
    const bool semiprime = is_semiprime(ring, options.caps).verdict;
    const auto commutative = is_commutative(ring);
    report.note("semiprime", semiprime);
    report.note("commutative", commutative.verdict);
    const auto found = enumerate_maps(ring, MapRole::derivation, search_options(options, true));
    report.count("nodes", found.nodes);
    report.count("scp_derivations", found.maps.size());
    if (!found.maps.empty() && !commutative) {
        auto w = map_witness("scp_derivation_on_noncommutative", found.maps.front());
        report.fail(absorb(w, commutative.witnesses.front(), "noncommuting_"));
        report.falsification = semiprime;
    }
    return report;
}

VerdictReport verify_scp_endomorphism(const GammaRing& ring, const VerifyOptions& options) {
    require_validated(ring);
    VerdictReport report;
    const bool semiprime = is_semiprime(ring, options.caps).verdict;
    report.note("semiprime", semiprime);

    // Necessity: every scp endomorphism differs from the identity by a
    // center-valued map.
    const auto scp = enumerate_maps(ring, MapRole::endomorphism, search_options(options, true));
    report.count("nodes", scp.nodes);
    report.count("scp_endomorphisms", scp.maps.size());
    for (const auto& sigma : scp.maps) {
        const auto d = defect_map(ring, sigma);
        if (!d.central) {
            auto w = map_witness("scp_endomorphism_defect_not_central", sigma);
            const auto inner = image_in_center(ring, d.defect);
            report.fail(absorb(w, inner.witnesses.front(), "defect_"));
            report.falsification = semiprime;
            break;
        }
    }

    // Sufficiency: sigma = id + zeta with zeta center-valued; among these the
    // endomorphisms must be scp.
    const auto& m = ring.m();
    const auto z = center(ring, options.caps);
    auto opts = search_options(options);
    opts.image_candidates.emplace(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        auto& list = (*opts.image_candidates)[i];
        for (const auto& c : z.elements())
            if (m.scale(m.modulus(i), c) == m.zero()) list.push_back(m.add(m.generator(i), c));
        std::sort(list.begin(), list.end());
    }
    const auto shifted = enumerate_maps(ring, MapRole::endomorphism, opts);
    report.count("nodes", shifted.nodes);
    report.count("central_shift_endomorphisms", shifted.maps.size());
    if (report) {
        for (const auto& sigma : shifted.maps) {
            const auto s = is_scp(ring, sigma);
            if (!s) {
                auto w = map_witness("central_shift_not_scp", sigma);
                report.fail(absorb(w, s.witnesses.front(), ""));
                report.falsification = true;
                break;
            }
        }
    }
    return report;
}

VerdictReport verify_prime_scp_identity(const GammaRing& ring, const VerifyOptions& options) {
    require_validated(ring);
    VerdictReport report;
    const bool prime = is_prime(ring, options.caps, options.workers).verdict;
    const bool commutative = is_commutative(ring).verdict;
    report.note("prime", prime);
    report.note("commutative", commutative);
    const bool applies = prime && !commutative;

    std::optional<MapEnumeration> scp;
    try {
        scp = enumerate_maps(ring, MapRole::endomorphism, search_options(options, true));
    } catch (const CapExceeded&) {
        if (applies) throw;
        report.notes.push_back("scp endomorphisms not enumerated: cap exceeded");
        report.notes.push_back("vacuous: hypotheses fail");
        return report;
    }
    report.count("nodes", scp->nodes);
    report.count("scp_endomorphisms", scp->maps.size());
    const auto other = std::find_if(scp->maps.begin(), scp->maps.end(),
                                    [](const AdditiveMap& f) { return !f.is_identity(); });
    report.note("non_identity_scp_endomorphism", other != scp->maps.end());
    if (!applies) {
        report.notes.push_back(prime ? "vacuous: commutative" : "vacuous: not prime");
        return report;
    }
    if (other != scp->maps.end()) {
        report.fail(map_witness("non_identity_scp_endomorphism", *other));
        report.falsification = true;
    }
    return report;
}

VerdictReport verify_theorem(const GammaRing& ring, TheoremId id, const VerifyOptions& options) {
    switch (id) {
    case TheoremId::remark_left_derivation: {
        VerdictReport report;
        const auto found = enumerate_maps(ring, MapRole::left_derivation, search_options(options));
        report.count("nodes", found.nodes);
        report.count("left_derivations", found.maps.size());
        for (const auto& delta : found.maps) {
            auto sub = verify_remark_left_derivation(ring, delta, options);
            for (const auto& [k, v] : sub.counters) report.count(k, v);
            if (sub.seed) report.seed = sub.seed;
            if (!sub) {
                auto w = map_witness("remark_left_derivation", delta);
                report.fail(absorb(w, sub.witnesses.front(), ""));
                report.falsification = true;
                break;
            }
        }
        return report;
    }
    case TheoremId::remark_center_permutation:
        return verify_center_permutation(ring, options.permutation_n_max, options);
    case TheoremId::thm_left_derivation_central:
        return verify_left_derivations_central(ring, options);
    case TheoremId::cor_prime_left_derivation:
        return verify_prime_left_derivation(ring, options);
    case TheoremId::thm_scp_derivation:
        return verify_scp_derivation(ring, options);
    case TheoremId::thm_scp_endomorphism:
        return verify_scp_endomorphism(ring, options);
    case TheoremId::cor_prime_scp_identity:
        return verify_prime_scp_identity(ring, options);
    }
    throw GammaError("verify_theorem: unknown theorem");
}

std::optional<std::string> failing_hypothesis(const GammaRing& ring, TheoremId id, const Caps& caps) {
    switch (id) {
    case TheoremId::remark_left_derivation:
    case TheoremId::remark_center_permutation:
        return std::nullopt;
    case TheoremId::thm_left_derivation_central:
    case TheoremId::thm_scp_derivation:
    case TheoremId::thm_scp_endomorphism:
        if (!is_semiprime(ring, caps)) return "semiprime";
        return std::nullopt;
    case TheoremId::cor_prime_left_derivation:
        if (!is_prime(ring, caps)) return "prime";
        return std::nullopt;
    case TheoremId::cor_prime_scp_identity:
        if (!is_prime(ring, caps)) return "prime";
        if (is_commutative(ring)) return "noncommutative";
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Looks for the target violation on one instance; nodes are charged to
// `used` and enumeration stops at `budget`.
std::optional<Witness> search_instance(const GammaRing& ring, SearchTarget target, std::uint64_t budget,
                                       std::uint64_t& used, unsigned workers) {
    MapSearchOptions opts;
    opts.caps.nodes = budget - used;
    opts.workers = workers;
    switch (target) {
    case SearchTarget::left_derivation_not_central: {
        const auto found = enumerate_maps(ring, MapRole::left_derivation, opts);
        used += found.nodes;
        for (const auto& delta : found.maps)
            if (auto c = image_in_center(ring, delta); !c) {
                auto w = map_witness(std::string(to_string(target)), delta);
                return absorb(w, c.witnesses.front(), "");
            }
        return std::nullopt;
    }
    case SearchTarget::scp_endo_defect_not_central: {
        opts.require_scp = true;
        const auto found = enumerate_maps(ring, MapRole::endomorphism, opts);
        used += found.nodes;
        for (const auto& sigma : found.maps)
            if (const auto d = defect_map(ring, sigma); !d.central) {
                auto w = map_witness(std::string(to_string(target)), sigma);
                return absorb(w, image_in_center(ring, d.defect).witnesses.front(), "defect_");
            }
        return std::nullopt;
    }
    case SearchTarget::scp_derivation_on_noncommutative: {
        const auto commutative = is_commutative(ring);
        if (commutative) return std::nullopt;
        opts.require_scp = true;
        const auto found = enumerate_maps(ring, MapRole::derivation, opts);
        used += found.nodes;
        if (found.maps.empty()) return std::nullopt;
        auto w = map_witness(std::string(to_string(target)), found.maps.front());
        return absorb(w, commutative.witnesses.front(), "noncommuting_");
    }
    }
    return std::nullopt;
}

} // namespace

VerdictReport search_counterexample(const SearchConfig& config) {
    if (config.node_budget == 0) throw GammaError("search_counterexample: budget must be positive");
    VerdictReport report;
    if (config.random) report.seed = config.random->seed;
    std::uint64_t used = 0;
    bool exhausted = false;

    auto visit = [&](const GammaRing& ring) {
        report.count("instances");
        try {
            if (auto w = search_instance(ring, config.target, config.node_budget, used, config.workers)) {
                w->instance = ring.name();
                const bool semiprime = is_semiprime(ring).verdict;
                report.note("semiprime", semiprime);
                report.falsification = semiprime;
                report.fail(std::move(*w));
                return true;
            }
        } catch (const CapExceeded&) {
            exhausted = true;
            used = config.node_budget;
            report.notes.push_back("budget exhausted on " + ring.name());
            return true;
        }
        return false;
    };

    bool stop = false;
    for (const auto& ring : config.instances)
        if ((stop = visit(ring))) break;
    if (!stop && config.random)
        for (std::uint64_t i = 0; i < config.random->count; ++i)
            if ((stop = visit(random_instance(config.random->seed + i, config.random->space)))) break;

    report.count("nodes", used);
    report.note("budget_exhausted", exhausted);
    return report;
}

} // namespace gammaring
