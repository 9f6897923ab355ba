#include <algorithm>

#include "doctest.h"

#include "gammaring/instances.hpp"
#include "gammaring/structure.hpp"
#include "oracles.hpp"

using namespace gammaring;

namespace {

GroupElement el(std::vector<Coord> c) { return GroupElement{std::move(c)}; }

std::vector<GammaRing> small_suite() {
    auto out = builtin_instances();
    out.push_back(ring_as_gamma_ring(upper_triangular_ring(2, 2), WholeRing{}));
    out.push_back(ring_as_gamma_ring(zq_ring(4), WholeRing{}));
    out.push_back(ring_as_gamma_ring(f4_field(), WholeRing{}));
    out.push_back(rect_matrix_instance(1, 2, 3));
    out.push_back(ring_as_gamma_ring(dual_numbers_ring(3), IntegersMod{3}));
    return out;
}

} // namespace

TEST_CASE("subgroup generation") {
    const FinAbGroup g({2, 4});
    const std::vector<GroupElement> seeds{el({0, 2}), el({1, 2}), el({0, 0})};
    const auto s = subgroup_generated(g, seeds);
    CHECK(s.order() == 4);
    CHECK(s.generators().size() == 2);
    CHECK(s.contains(el({1, 0})));
    CHECK_FALSE(s.contains(el({0, 1})));
    CHECK(std::is_sorted(s.elements().begin(), s.elements().end()));
    const std::vector<GroupElement> all{el({1, 0}), el({0, 1})};
    CHECK(subgroup_generated(g, all).is_whole());
    CHECK(subgroup_generated(g, {}).order() == 1);
}

TEST_CASE("center, commutativity, primeness agree with the oracles") {
    for (const auto& ring : small_suite()) {
        CAPTURE(ring.name());
        const oracle::Ring o(ring);
        const auto z = center(ring);
        const auto oz = oracle::center(o);
        REQUIRE(z.order() == oz.size());
        for (std::size_t i = 0; i < oz.size(); ++i) CHECK(z.elements()[i].coords == oz[i]);
        for (const auto& x : o.ms) CHECK(is_central(ring, el(x)) == oracle::central(o, x));
        CHECK(is_commutative(ring).verdict == oracle::commutative(o));
        if (o.ms.size() * o.gs.size() <= 1024) {
            CHECK(is_prime(ring).verdict == oracle::prime(o));
            CHECK(is_semiprime(ring).verdict == oracle::semiprime(o));
        }
    }
}

TEST_CASE("the Frobenius analog") {
    const auto ring = frobenius_example().ring;
    const auto z = center(ring);
    CHECK(z.order() == 4);
    for (const auto& c : z.elements())
        for (std::size_t i = 0; i < 4; ++i) CHECK(c.coords[i] == 0);
    CHECK_FALSE(is_commutative(ring).verdict);
    CHECK(is_semiprime(ring).verdict);
    CHECK_FALSE(is_prime(ring).verdict);
    // (I, 1) is not central: I E11 E12 = E12 but E12 E11 I = 0.
    CHECK_FALSE(is_central(ring, el({1, 0, 0, 1, 1, 0})));
}

TEST_CASE("named structure facts") {
    const auto rect12 = rect_matrix_instance(1, 2, 2);
    CHECK(center(rect12).order() == 1);
    CHECK(is_prime(rect12).verdict);
    CHECK(is_prime(rect_matrix_instance(2, 1, 2)).verdict);
    const auto nc = is_commutative(rect12);
    REQUIRE_FALSE(nc.verdict);
    const auto& w = nc.witnesses.front();
    CHECK(w.kind == "noncommuting_generators");
    CHECK(w.find("a")->coords == std::vector<Coord>{1, 0});
    CHECK(w.find("b")->coords == std::vector<Coord>{0, 1});
    CHECK(w.find("alpha")->coords == std::vector<Coord>{1, 0});
    CHECK(w.find("value")->coords == std::vector<Coord>{0, 1});

    const auto dual = dual_numbers_instance();
    const auto sp = is_semiprime(dual);
    REQUIRE_FALSE(sp.verdict);
    CHECK(sp.witnesses.front().find("a")->coords == std::vector<Coord>{0, 1});
    CHECK(is_commutative(dual).verdict);

    const auto z2 = z2_instance();
    const auto zz = direct_product(z2, z2);
    const auto p = is_prime(zz);
    REQUIRE_FALSE(p.verdict);
    CHECK(p.witnesses.front().find("a")->coords == std::vector<Coord>{0, 1});
    CHECK(p.witnesses.front().find("b")->coords == std::vector<Coord>{1, 0});
    CHECK(is_semiprime(zz).verdict);
    CHECK(is_semiprime(direct_product(rect12, z2)).verdict);
}

TEST_CASE("prime witnesses do not depend on the worker count") {
    for (const auto& ring : small_suite()) {
        const auto one = is_prime(ring, {}, 1);
        for (unsigned w : {2u, 4u}) {
            const auto many = is_prime(ring, {}, w);
            CHECK(many.verdict == one.verdict);
            CHECK(many.witnesses == one.witnesses);
        }
    }
}

TEST_CASE("ideals") {
    const auto rect12 = rect_matrix_instance(1, 2, 2);
    const std::vector<GroupElement> e11{el({1, 0})};
    const auto u = subgroup_generated(rect12.m(), e11);
    // m gamma E11 is a scalar multiple of E11; E11 gamma m need not be.
    CHECK(is_ideal(rect12, u, IdealSide::left).verdict);
    CHECK_FALSE(is_ideal(rect12, u, IdealSide::right).verdict);
    CHECK_FALSE(is_ideal(rect12, u, IdealSide::two_sided).verdict);

    const auto z2 = z2_instance();
    const auto zz = direct_product(z2, z2);
    const std::vector<GroupElement> first{el({1, 0})};
    CHECK(is_ideal(zz, subgroup_generated(zz.m(), first), IdealSide::two_sided).verdict);

    // Brute-force cross-check over every subgroup-generating element.
    const oracle::Ring o(rect12);
    for (const auto& x : o.ms) {
        const std::vector<GroupElement> seed{el(x)};
        const auto s = subgroup_generated(rect12.m(), seed);
        bool left = true, right = true;
        for (const auto& y : s.elements())
            for (const auto& m : o.ms)
                for (const auto& g : o.gs) {
                    left = left && s.contains(el(o.prod(m, g, y.coords)));
                    right = right && s.contains(el(o.prod(y.coords, g, m)));
                }
        CHECK(is_ideal(rect12, s, IdealSide::left).verdict == left);
        CHECK(is_ideal(rect12, s, IdealSide::right).verdict == right);
    }
}

TEST_CASE("center honours the element cap") {
    Caps caps;
    caps.elements = 16;
    CHECK_THROWS_AS(center(frobenius_example().ring, caps), CapExceeded);
}
