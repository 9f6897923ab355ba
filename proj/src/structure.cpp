#include "gammaring/structure.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "indexed_ring.hpp"

namespace gammaring {

namespace {

using detail::Idx;
using detail::IndexedRing;

class Bitset {
public:
    explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    bool subset_of(const Bitset& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

// row(a) = {a alpha m}; killers(b) = {x : x beta b = 0 for all beta}.
// a Γ M Γ b = 0 exactly when row(a) is inside killers(b).
struct AnnihilatorTables {
    std::vector<Bitset> rows;
    std::vector<Bitset> killers;
};

AnnihilatorTables annihilator_tables(const IndexedRing& r) {
    const Idx nm = r.m().order(), ng = r.g().order();
    AnnihilatorTables t;
    t.rows.assign(nm, Bitset(nm));
    t.killers.assign(nm, Bitset(nm));
    for (Idx a = 0; a < nm; ++a)
        for (Idx al = 0; al < ng; ++al)
            for (Idx x = 0; x < nm; ++x) t.rows[a].set(r.prod(a, al, x));
    for (Idx b = 0; b < nm; ++b)
        for (Idx x = 0; x < nm; ++x) {
            bool kills = true;
            for (Idx be = 0; be < ng && kills; ++be) kills = r.prod(x, be, b) == 0;
            if (kills) t.killers[b].set(x);
        }
    return t;
}

Witness annihilation_witness(const IndexedRing& r, Idx a, std::optional<Idx> b, const char* kind) {
    Witness w{kind};
    w.with("a", r.m().decode(a));
    if (b) w.with("b", r.m().decode(*b));
    return w;
}

} // namespace

bool Subgroup::contains(const GroupElement& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

Subgroup subgroup_generated(const FinAbGroup& g, std::span<const GroupElement> seeds, const Caps& caps) {
    caps.check_elements("subgroup_generated", g.order());
    for (const auto& s : seeds) g.require(s, "subgroup_generated");
    const detail::IndexedGroup ig(g);
    std::vector<char> member(ig.order(), 0);
    std::vector<Idx> current{0};
    member[0] = 1;
    Subgroup out;
    out.parent_ = g;
    for (const auto& seed : seeds) {
        const Idx s = ig.encode(seed);
        if (member[s]) continue;
        out.generators_.push_back(seed);
        // span(S, s) = union of cosets current + n s until n s falls back inside.
        const std::vector<Idx> base = current;
        for (Idx shift = s; !member[shift]; shift = ig.add(shift, s)) {
            for (Idx x : base) {
                const Idx y = ig.add(x, shift);
                member[y] = 1;
                current.push_back(y);
            }
        }
    }
    std::sort(current.begin(), current.end());
    out.elements_.reserve(current.size());
    for (Idx x : current) out.elements_.push_back(ig.decode(x));
    return out;
}

bool is_central(const GammaRing& ring, const GroupElement& x) {
    ring.m().require(x, "is_central");
    for (std::size_t k = 0; k < ring.m().rank(); ++k)
        for (std::size_t j = 0; j < ring.gamma().rank(); ++j)
            if (commutator(ring, x, ring.m().generator(k), ring.gamma().generator(j)) != ring.m().zero())
                return false;
    return true;
}

Subgroup center(const GammaRing& ring, const Caps& caps) {
    require_validated(ring);
    caps.check_elements("center", ring.m().order());
    const auto& r = detail::indexed(ring);
    const auto& m = r.m();
    std::vector<Idx> gens_m, gens_g;
    for (std::size_t k = 0; k < m.rank(); ++k) gens_m.push_back(m.generator(k));
    for (std::size_t j = 0; j < r.g().rank(); ++j) gens_g.push_back(r.g().generator(j));
    std::vector<GroupElement> central;
    for (Idx a = 0; a < m.order(); ++a) {
        bool ok = true;
        for (Idx e : gens_m) {
            for (Idx f : gens_g)
                if (r.commutator(a, e, f) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) central.push_back(m.decode(a));
    }
    // The central elements already form a subgroup; generating from all of
    // them keeps the element list canonical and records a small basis.
    return subgroup_generated(ring.m(), central, caps);
}

VerdictReport is_commutative(const GammaRing& ring) {
    require_validated(ring);
    VerdictReport report;
    const auto& m = ring.m();
    const auto& g = ring.gamma();
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t k = 0; k < m.rank(); ++k)
            for (std::size_t j = 0; j < g.rank(); ++j) {
                report.count("generator_triples");
                const auto value = commutator(ring, m.generator(i), m.generator(k), g.generator(j));
                if (value != m.zero()) {
                    report.fail(Witness{"noncommuting_generators"}
                                    .with("a", m.generator(i))
                                    .with("b", m.generator(k))
                                    .with("alpha", g.generator(j))
                                    .with("value", value));
                    return report;
                }
            }
    return report;
}

VerdictReport is_semiprime(const GammaRing& ring, const Caps& caps) {
    require_validated(ring);
    caps.check_elements("is_semiprime", ring.m().order());
    const auto& r = detail::indexed(ring);
    const auto tables = annihilator_tables(r);
    VerdictReport report;
    report.count("elements", r.m().order());
    for (Idx a = 1; a < r.m().order(); ++a) {
        if (tables.rows[a].subset_of(tables.killers[a])) {
            report.fail(annihilation_witness(r, a, std::nullopt, "a_Gamma_M_Gamma_a_zero"));
            return report;
        }
    }
    return report;
}

VerdictReport is_prime(const GammaRing& ring, const Caps& caps, unsigned workers) {
    require_validated(ring);
    caps.check_elements("is_prime", ring.m().order());
    const auto& r = detail::indexed(ring);
    const auto tables = annihilator_tables(r);
    const Idx nm = r.m().order();
    workers = std::max(1u, workers);

    // Each worker scans a residue class of `a` and keeps its least witness;
    // the merge takes the least over workers.
    std::vector<std::optional<std::pair<Idx, Idx>>> found(workers);
    auto scan = [&](unsigned w) {
        for (Idx a = 1 + w; a < nm; a += workers) {
            for (Idx b = 1; b < nm; ++b)
                if (tables.rows[a].subset_of(tables.killers[b])) {
                    found[w] = std::pair{a, b};
                    return;
                }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    }

    VerdictReport report;
    report.count("elements", nm);
    std::optional<std::pair<Idx, Idx>> best;
    for (const auto& f : found)
        if (f && (!best || *f < *best)) best = f;
    if (best) report.fail(annihilation_witness(r, best->first, best->second, "a_Gamma_M_Gamma_b_zero"));
    return report;
}

VerdictReport is_ideal(const GammaRing& ring, const Subgroup& u, IdealSide side) {
    require_validated(ring);
    if (!(u.parent() == ring.m())) throw ShapeMismatch("is_ideal: subgroup does not live in M");
    VerdictReport report;
    const auto& m = ring.m();
    const auto& g = ring.gamma();
    const bool left = side != IdealSide::right;
    const bool right = side != IdealSide::left;
    for (const auto& x : u.generators())
        for (std::size_t j = 0; j < g.rank(); ++j)
            for (std::size_t k = 0; k < m.rank(); ++k) {
                if (left) {
                    report.count("products");
                    const auto p = product(ring, m.generator(k), g.generator(j), x);
                    if (!u.contains(p)) {
                        report.fail(Witness{"left_product_escapes"}
                                        .with("m", m.generator(k))
                                        .with("alpha", g.generator(j))
                                        .with("u", x)
                                        .with("value", p));
                        return report;
                    }
                }
                if (right) {
                    report.count("products");
                    const auto p = product(ring, x, g.generator(j), m.generator(k));
                    if (!u.contains(p)) {
                        report.fail(Witness{"right_product_escapes"}
                                        .with("u", x)
                                        .with("alpha", g.generator(j))
                                        .with("m", m.generator(k))
                                        .with("value", p));
                        return report;
                    }
                }
            }
    return report;
}

} // namespace gammaring
