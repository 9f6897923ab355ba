#include "doctest.h"

#include "gammaring/instances.hpp"
#include "gammaring/structure.hpp"
#include "oracles.hpp"

using namespace gammaring;

namespace {

GroupElement el(std::vector<Coord> c) { return GroupElement{std::move(c)}; }

} // namespace

TEST_CASE("rings") {
    CHECK_THROWS_AS(make_ring("bad", FinAbGroup({2}), {{el({1})}}, el({0})), GammaError);
    CHECK_THROWS_AS(make_ring("bad", FinAbGroup({4}), {{el({1})}, {el({0})}}), GammaError);
    const auto f4 = f4_field();
    // x * x = x + 1
    CHECK(ring_multiply(f4, el({0, 1}), el({0, 1})) == el({1, 1}));
    CHECK(ring_multiply(f4, el({1, 1}), el({0, 1})) == el({1, 0}));
    const auto m2 = matrix_ring(2, 2);
    CHECK(m2.group.order() == 16);
    REQUIRE(m2.unit);
    CHECK(*m2.unit == el({1, 0, 0, 1}));
    CHECK(upper_triangular_ring(2, 3).group.order() == 27);
    CHECK(ring_product(zq_ring(2), zq_ring(3)).group.order() == 6);
}

TEST_CASE("every built-in validates, and full associativity agrees") {
    const auto all = builtin_instances();
    CHECK(all.size() == 7);
    for (const auto& ring : all) {
        CAPTURE(ring.name());
        CHECK(validate_associativity(ring).verdict);
        if (ring.m().order() <= 16 && ring.gamma().order() <= 16) CHECK(oracle::associative(oracle::Ring(ring)));
    }
}

TEST_CASE("ring_as_gamma_ring choices") {
    const auto z2 = ring_as_gamma_ring(zq_ring(2), WholeRing{});
    CHECK(z2 == z2_instance());
    const auto dual = ring_as_gamma_ring(dual_numbers_ring(2), IntegersMod{2});
    CHECK(dual.gamma().order() == 2);
}

TEST_CASE("subgroup bases must be independent") {
    const auto r = ring_product(zq_ring(2), zq_ring(2));
    CHECK_THROWS_AS(ring_as_gamma_ring(r, SubgroupBasis{{el({1, 1}), el({1, 1})}}), GammaError);
    CHECK_NOTHROW(ring_as_gamma_ring(r, SubgroupBasis{{el({1, 1})}}));
}

TEST_CASE("rect family") {
    const auto r = rect_matrix_instance(1, 2, 2);
    CHECK(r.name() == "rect(1,2;2)");
    CHECK(r.m().order() == 4);
    CHECK(r.gamma().order() == 4);
    CHECK(rect_matrix_instance(1, 1, 3) == ring_as_gamma_ring(zq_ring(3), WholeRing{}));
    Caps caps;
    caps.elements = 64;
    CHECK_THROWS_AS(rect_matrix_instance(2, 2, 3, caps), CapExceeded);
    for (auto [m, n, q] : {std::tuple{1, 2, 2}, {2, 1, 2}, {2, 2, 2}, {1, 2, 3}, {1, 3, 2}}) {
        const auto ring = rect_matrix_instance(m, n, q);
        CAPTURE(ring.name());
        CHECK(is_prime(ring).verdict);
    }
}

TEST_CASE("direct products") {
    const auto z2 = z2_instance();
    const auto zz = direct_product(z2, z2);
    CHECK(zz.m().order() == 4);
    CHECK(is_commutative(zz).verdict);
    CHECK_FALSE(is_prime(zz).verdict);
    const auto rz = direct_product(rect_matrix_instance(1, 2, 2), z2);
    CHECK(is_semiprime(rz).verdict);
    CHECK_FALSE(is_commutative(rz).verdict);
    CHECK_FALSE(is_prime(rz).verdict);
    const auto trivial = build_gamma_ring(FinAbGroup(std::vector<Coord>{}), FinAbGroup(std::vector<Coord>{}), {});
    const auto copy = direct_product(rz, trivial);
    CHECK(copy.m() == rz.m());
    CHECK(copy.flat_tensor().size() == rz.flat_tensor().size());
    CHECK(std::equal(copy.flat_tensor().begin(), copy.flat_tensor().end(), rz.flat_tensor().begin()));
    // Semiprime iff both factors are.
    CHECK_FALSE(is_semiprime(direct_product(dual_numbers_instance(), z2)).verdict);
}

TEST_CASE("the Frobenius analog carrier") {
    const auto ex = frobenius_example();
    CHECK(ex.ring.m().order() == 64);
    CHECK(ex.ring.gamma().order() == 32);
    CHECK(validate_associativity(ex.ring).verdict);
}

TEST_CASE("random instances are reproducible and valid") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto a = random_instance(seed);
        CAPTURE(a.name());
        CHECK(a == random_instance(seed));
        CHECK(a.name() == random_instance(seed).name());
        CHECK(validate_associativity(a).verdict);
        CHECK(a.m().order() <= 64);
        CHECK(a.gamma().order() <= 64);
    }
    RecipeSpace rect_only;
    rect_only.ring_wrap = false;
    rect_only.product = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_prime(random_instance(seed, rect_only)).verdict);
    RecipeSpace none;
    none.rect = none.ring_wrap = none.product = false;
    CHECK_THROWS_AS(random_instance(1, none), GammaError);
}
