#include "gammaring/instances.hpp"

#include <numeric>
#include <random>

#include "gammaring/structure.hpp"

namespace gammaring {

namespace {

GroupElement unit_vector(const FinAbGroup& g, std::size_t i) { return g.generator(i); }

GammaRing validated(GammaRing ring) {
    require_validated(ring);
    return ring;
}

std::string q_suffix(Coord q) { return "Z" + std::to_string(q); }

} // namespace

RingSpec make_ring(std::string name, FinAbGroup group, std::vector<std::vector<GroupElement>> mul,
                   std::optional<GroupElement> unit) {
    const std::size_t k = group.rank();
    if (mul.size() != k) throw ShapeMismatch("ring table has wrong number of rows");
    for (std::size_t i = 0; i < k; ++i) {
        if (mul[i].size() != k) throw ShapeMismatch("ring table row has wrong length");
        for (std::size_t j = 0; j < k; ++j) {
            group.require(mul[i][j], "make_ring");
            if (group.scale(std::gcd(group.modulus(i), group.modulus(j)), mul[i][j]) != group.zero())
                throw NotWellDefined(i, 0, j);
        }
    }
    RingSpec r{std::move(name), std::move(group), std::move(mul), std::move(unit)};
    const auto& g = r.group;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                const auto lhs = ring_multiply(r, r.mul[a][b], unit_vector(g, c));
                const auto rhs = ring_multiply(r, unit_vector(g, a), r.mul[b][c]);
                if (lhs != rhs) throw GammaError("ring '" + r.name + "' is not associative on generators");
            }
    if (r.unit) {
        for (std::size_t a = 0; a < k; ++a)
            if (ring_multiply(r, *r.unit, g.generator(a)) != g.generator(a) ||
                ring_multiply(r, g.generator(a), *r.unit) != g.generator(a))
                throw GammaError("ring '" + r.name + "': declared unit is not a two-sided identity");
    }
    return r;
}

GroupElement ring_multiply(const RingSpec& ring, const GroupElement& a, const GroupElement& b) {
    const auto& g = ring.group;
    g.require(a, "ring_multiply");
    g.require(b, "ring_multiply");
    GroupElement acc = g.zero();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t k = 0; k < g.rank(); ++k) {
            if (b.coords[k] == 0) continue;
            acc = g.add(acc, g.scale(a.coords[i] * b.coords[k], ring.mul[i][k]));
        }
    }
    return acc;
}

RingSpec zq_ring(Coord q) {
    FinAbGroup g({q});
    return make_ring(q_suffix(q), g, {{g.generator(0)}}, g.generator(0));
}

RingSpec dual_numbers_ring(Coord q) {
    FinAbGroup g({q, q});
    const auto one = g.generator(0), t = g.generator(1);
    return make_ring("dual(" + q_suffix(q) + ")", g, {{one, t}, {t, g.zero()}}, one);
}

RingSpec matrix_ring(std::size_t n, Coord q) {
    FinAbGroup g(std::vector<Coord>(n * n, q));
    std::vector<std::vector<GroupElement>> mul(n * n, std::vector<GroupElement>(n * n, g.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t v = 0; v < n; ++v) mul[r * n + s][s * n + v] = g.generator(r * n + v);
    GroupElement unit = g.zero();
    for (std::size_t r = 0; r < n; ++r) unit.coords[r * n + r] = 1;
    return make_ring("M" + std::to_string(n) + "(" + q_suffix(q) + ")", g, std::move(mul), unit);
}

RingSpec upper_triangular_ring(std::size_t n, Coord q) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r; s < n; ++s) units.emplace_back(r, s);
    FinAbGroup g(std::vector<Coord>(units.size(), q));
    auto index = [&](std::size_t r, std::size_t s) {
        for (std::size_t u = 0; u < units.size(); ++u)
            if (units[u] == std::pair{r, s}) return u;
        return units.size();
    };
    std::vector<std::vector<GroupElement>> mul(units.size(), std::vector<GroupElement>(units.size(), g.zero()));
    for (std::size_t a = 0; a < units.size(); ++a)
        for (std::size_t b = 0; b < units.size(); ++b)
            if (units[a].second == units[b].first)
                mul[a][b] = g.generator(index(units[a].first, units[b].second));
    GroupElement unit = g.zero();
    for (std::size_t r = 0; r < n; ++r) unit.coords[index(r, r)] = 1;
    return make_ring("UT" + std::to_string(n) + "(" + q_suffix(q) + ")", g, std::move(mul), unit);
}

RingSpec f4_field() {
    FinAbGroup g({2, 2});
    const auto one = g.generator(0), x = g.generator(1);
    return make_ring("F4", g, {{one, x}, {x, GroupElement{{1, 1}}}}, one);
}

RingSpec ring_product(const RingSpec& a, const RingSpec& b) {
    const std::size_t ka = a.group.rank(), kb = b.group.rank();
    std::vector<Coord> moduli(a.group.moduli().begin(), a.group.moduli().end());
    moduli.insert(moduli.end(), b.group.moduli().begin(), b.group.moduli().end());
    FinAbGroup g(std::move(moduli));
    auto embed = [&](const GroupElement& x, std::size_t offset) {
        GroupElement y = g.zero();
        for (std::size_t i = 0; i < x.coords.size(); ++i) y.coords[offset + i] = x.coords[i];
        return y;
    };
    std::vector<std::vector<GroupElement>> mul(ka + kb, std::vector<GroupElement>(ka + kb, g.zero()));
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t k = 0; k < ka; ++k) mul[i][k] = embed(a.mul[i][k], 0);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t k = 0; k < kb; ++k) mul[ka + i][ka + k] = embed(b.mul[i][k], ka);
    std::optional<GroupElement> unit;
    if (a.unit && b.unit) unit = g.add(embed(*a.unit, 0), embed(*b.unit, ka));
    return make_ring(a.name + "x" + b.name, g, std::move(mul), unit);
}

GammaRing ring_as_gamma_ring(const RingSpec& ring, const GammaChoice& gamma) {
    const auto& g = ring.group;
    const std::size_t k = g.rank();
    std::vector<GroupElement> gamma_elems; // images of Γ's generators in R
    std::vector<Coord> gamma_moduli;
    std::string label;
    if (std::holds_alternative<WholeRing>(gamma)) {
        for (std::size_t j = 0; j < k; ++j) gamma_elems.push_back(g.generator(j));
        gamma_moduli.assign(g.moduli().begin(), g.moduli().end());
        label = "R";
    } else if (const auto* u = std::get_if<SubgroupBasis>(&gamma)) {
        std::uint64_t expected = 1;
        for (const auto& x : u->basis) {
            g.require(x, "ring_as_gamma_ring");
            const Coord o = g.order_of(x);
            if (o < 2) throw GammaError("ring_as_gamma_ring: basis contains zero");
            gamma_elems.push_back(x);
            gamma_moduli.push_back(o);
            expected *= static_cast<std::uint64_t>(o);
        }
        if (subgroup_generated(g, u->basis).order() != expected)
            throw GammaError("ring_as_gamma_ring: subgroup basis is not independent");
        label = "U";
        for (const auto& x : u->basis) label += to_string(x);
    } else {
        const Coord n = std::get<IntegersMod>(gamma).n;
        gamma_moduli.push_back(n);
        label = "Z" + std::to_string(n);
    }

    const bool scaled = std::holds_alternative<IntegersMod>(gamma);
    const std::size_t kg = gamma_moduli.size();
    StructureTensor t(k, std::vector<std::vector<GroupElement>>(kg));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < kg; ++j)
            for (std::size_t c = 0; c < k; ++c) {
                const auto left = scaled ? g.generator(i) : ring_multiply(ring, g.generator(i), gamma_elems[j]);
                t[i][j].push_back(ring_multiply(ring, left, g.generator(c)));
            }
    return validated(build_gamma_ring(g, FinAbGroup(std::move(gamma_moduli)), t,
                                      ring.name + "[Γ=" + label + "]"));
}

GammaRing rect_matrix_instance(std::size_t m, std::size_t n, Coord q, const Caps& caps) {
    if (m == 0 || n == 0) throw GammaError("rect_matrix_instance: dimensions must be positive");
    if (q < 2) throw ModulusOutOfRange(0, q);
    std::uint64_t order = 1;
    for (std::size_t e = 0; e < m * n; ++e) {
        order *= static_cast<std::uint64_t>(q);
        caps.check_elements("rect_matrix_instance", order);
    }
    FinAbGroup mg(std::vector<Coord>(m * n, q));
    FinAbGroup gg(std::vector<Coord>(n * m, q));
    StructureTensor t(m * n, std::vector<std::vector<GroupElement>>(n * m,
                                                                    std::vector<GroupElement>(m * n, mg.zero())));
    // E_rs E_uv E_pt = [s == u][v == p] E_rt
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t tt = 0; tt < n; ++tt)
                    t[r * n + s][s * m + v][v * n + tt] = mg.generator(r * n + tt);
    return validated(build_gamma_ring(mg, gg, t,
                                      "rect(" + std::to_string(m) + "," + std::to_string(n) + ";" +
                                          std::to_string(q) + ")"));
}

GammaRing direct_product(const GammaRing& a, const GammaRing& b) {
    require_validated(a);
    require_validated(b);
    const std::size_t ka = a.m().rank(), kb = b.m().rank();
    const std::size_t ga = a.gamma().rank(), gb = b.gamma().rank();
    auto concat = [](const FinAbGroup& x, const FinAbGroup& y) {
        std::vector<Coord> moduli(x.moduli().begin(), x.moduli().end());
        moduli.insert(moduli.end(), y.moduli().begin(), y.moduli().end());
        return FinAbGroup(std::move(moduli));
    };
    FinAbGroup m = concat(a.m(), b.m());
    FinAbGroup g = concat(a.gamma(), b.gamma());
    auto embed = [&](const GroupElement& x, std::size_t offset) {
        GroupElement y = m.zero();
        for (std::size_t i = 0; i < x.coords.size(); ++i) y.coords[offset + i] = x.coords[i];
        return y;
    };
    StructureTensor t(ka + kb, std::vector<std::vector<GroupElement>>(
                                   ga + gb, std::vector<GroupElement>(ka + kb, m.zero())));
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ga; ++j)
            for (std::size_t k = 0; k < ka; ++k) t[i][j][k] = embed(a.entry(i, j, k), 0);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < gb; ++j)
            for (std::size_t k = 0; k < kb; ++k) t[ka + i][ga + j][ka + k] = embed(b.entry(i, j, k), ka);
    return validated(build_gamma_ring(std::move(m), std::move(g), t, a.name() + " x " + b.name()));
}

ExampleInstance frobenius_example() {
    const RingSpec r = ring_product(matrix_ring(2, 2), f4_field());
    const auto& g = r.group;
    std::vector<GroupElement> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(g.generator(i));
    basis.push_back(g.generator(4)); // 1 in F_4 spans F_2
    GammaRing ring = ring_as_gamma_ring(r, SubgroupBasis{basis}).with_name("M2(F2)xF4[Γ=M2(F2)xF2]");

    // Frobenius on F_4: 1 -> 1, x -> x^2 = x + 1.
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < 5; ++i) images.push_back(g.generator(i));
    images.push_back(g.add(g.generator(4), g.generator(5)));
    return {std::move(ring), make_additive_map(g, g, std::move(images))};
}

GammaRing z2_instance() { return ring_as_gamma_ring(zq_ring(2), WholeRing{}).with_name("Z2"); }

GammaRing dual_numbers_instance() {
    return ring_as_gamma_ring(dual_numbers_ring(2), IntegersMod{2}).with_name("dual(Z2)[Γ=Z2]");
}

std::vector<GammaRing> builtin_instances() {
    const auto z2 = z2_instance();
    const auto rect12 = rect_matrix_instance(1, 2, 2);
    return {z2,
            dual_numbers_instance(),
            rect12,
            rect_matrix_instance(2, 1, 2),
            direct_product(z2, z2),
            direct_product(rect12, z2),
            frobenius_example().ring};
}

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    // Modulo bias is irrelevant at these sizes and keeps draws identical
    // across standard libraries.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

private:
    std::mt19937_64 rng_;
};

RingSpec random_ring(Draw& d) {
    switch (d.below(6)) {
    case 0: return zq_ring(static_cast<Coord>(2 + d.below(4)));
    case 1: return dual_numbers_ring(static_cast<Coord>(2 + d.below(2)));
    case 2: return f4_field();
    case 3: return upper_triangular_ring(2, 2);
    case 4: return matrix_ring(2, 2);
    default: return ring_product(zq_ring(2), dual_numbers_ring(2));
    }
}

GammaRing random_ring_wrap(Draw& d) {
    const RingSpec r = random_ring(d);
    const auto& g = r.group;
    switch (d.below(3)) {
    case 0: return ring_as_gamma_ring(r, WholeRing{});
    case 1: {
        Coord exponent = 1;
        for (Coord q : g.moduli()) exponent = std::lcm(exponent, q);
        return ring_as_gamma_ring(r, IntegersMod{exponent});
    }
    default: {
        // Nonempty subset of the canonical generators is always independent.
        std::vector<GroupElement> basis;
        while (basis.empty())
            for (std::size_t i = 0; i < g.rank(); ++i)
                if (d.below(2)) basis.push_back(g.generator(i));
        return ring_as_gamma_ring(r, SubgroupBasis{std::move(basis)});
    }
    }
}

GammaRing random_rect(Draw& d) {
    const std::size_t m = 1 + d.below(2), n = 1 + d.below(2);
    const Coord q = d.below(2) ? 3 : 2;
    return rect_matrix_instance(m, n, q);
}

bool fits(const GammaRing& r, std::uint64_t max_order) {
    return r.m().order() <= max_order && r.gamma().order() <= max_order;
}

} // namespace

GammaRing random_instance(std::uint64_t seed, const RecipeSpace& space) {
    std::vector<int> families;
    if (space.rect) families.push_back(0);
    if (space.ring_wrap) families.push_back(1);
    if (space.product && (space.rect || space.ring_wrap)) families.push_back(2);
    if (families.empty()) throw GammaError("random_instance: empty recipe space");

    Draw d(seed);
    auto base = [&]() {
        if (space.rect && (!space.ring_wrap || d.below(2))) return random_rect(d);
        return random_ring_wrap(d);
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int family = families[d.below(families.size())];
        GammaRing r = family == 0 ? random_rect(d) : family == 1 ? random_ring_wrap(d) : direct_product(base(), base());
        if (!fits(r, space.max_order)) continue;
        return r.with_name("random(" + std::to_string(seed) + "):" + r.name());
    }
    // Every family has members of order <= 9, so this needs a tiny max_order.
    throw GammaError("random_instance: no recipe fits max_order " + std::to_string(space.max_order));
}

} // namespace gammaring
