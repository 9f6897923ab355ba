#include "doctest.h"

#include "gammaring/gamma_ring.hpp"
#include "gammaring/instances.hpp"
#include "gammaring/maps.hpp"
#include "oracles.hpp"

using namespace gammaring;

namespace {

GroupElement el(std::vector<Coord> c) { return GroupElement{std::move(c)}; }

GammaRing perturbed_rect12() {
    auto t = rect_matrix_instance(1, 2, 2).tensor();
    t[0][1][0] = el({1, 0});
    return build_gamma_ring(FinAbGroup({2, 2}), FinAbGroup({2, 2}), t, "broken");
}

} // namespace

TEST_CASE("tensor shape checks") {
    const FinAbGroup m({2}), g({2});
    CHECK_THROWS_AS(build_gamma_ring(m, g, {}), TensorShapeMismatch);
    CHECK_THROWS_AS(build_gamma_ring(m, g, {{{el({1}), el({0})}}}), TensorShapeMismatch);
    CHECK_THROWS_AS(build_gamma_ring(m, g, {{{el({1, 0})}}}), TensorShapeMismatch);
    CHECK_THROWS_AS(build_gamma_ring(m, g, {{{el({2})}}}), TensorShapeMismatch);
    CHECK_NOTHROW(build_gamma_ring(m, g, {{{el({1})}}}));
}

TEST_CASE("entries must be killed by gcd(d_i, c_j, d_k)") {
    // M = Z4, Γ = Z2: e f e must have order dividing 2.
    const FinAbGroup m({4}), g({2});
    CHECK_NOTHROW(build_gamma_ring(m, g, {{{el({2})}}}));
    try {
        build_gamma_ring(m, g, {{{el({1})}}});
        FAIL("expected NotWellDefined");
    } catch (const NotWellDefined& e) {
        CHECK(e.is_tensor_entry());
        CHECK(e.index() == 0);
        CHECK(e.j() == 0);
        CHECK(e.k() == 0);
    }
}

TEST_CASE("products agree with the brute-force oracle") {
    for (const auto& ring : builtin_instances()) {
        if (ring.m().order() * ring.gamma().order() > 256) continue;
        const oracle::Ring o(ring);
        for (const auto& a : o.ms)
            for (const auto& al : o.gs)
                for (const auto& b : o.ms)
                    CHECK(product(ring, el(a), el(al), el(b)).coords == o.prod(a, al, b));
    }
}

TEST_CASE("generator associativity agrees with full associativity") {
    for (const auto& ring : builtin_instances()) {
        if (ring.m().order() > 16 || ring.gamma().order() > 16) continue;
        CHECK(validate_associativity(ring).verdict);
        CHECK(oracle::associative(oracle::Ring(ring)));
    }
    const auto broken = perturbed_rect12();
    const auto v = validate_associativity(broken);
    CHECK_FALSE(v.verdict);
    CHECK_FALSE(oracle::associative(oracle::Ring(broken)));
    REQUIRE(v.witnesses.size() == 1);
    const auto& w = v.witnesses.front();
    CHECK(w.find("lhs")->coords != w.find("rhs")->coords);
    CHECK(v.counters.at("generator_tuples") >= 1);
}

TEST_CASE("analysis refuses unvalidated instances") {
    const auto broken = perturbed_rect12();
    CHECK_FALSE(is_validated(broken));
    CHECK_THROWS_AS(require_validated(broken), NotValidated);
    CHECK_THROWS_AS(check_role(broken, identity_map(broken.m()), MapRole::endomorphism), NotValidated);
    CHECK(is_validated(z2_instance()));
}

TEST_CASE("commutator on rect(1,2;2)") {
    const auto r = rect_matrix_instance(1, 2, 2);
    // E11 (E11) E12 - E12 (E11) E11 = E12
    CHECK(commutator(r, el({1, 0}), el({0, 1}), el({1, 0})) == el({0, 1}));
    CHECK(commutator(r, el({1, 1}), el({1, 1}), el({1, 1})) == el({0, 0}));
    CHECK(commutator(z2_instance(), el({1}), el({1}), el({1})) == el({0}));
}

TEST_CASE("gamma bracket agrees with its definition") {
    const auto r = rect_matrix_instance(1, 2, 2);
    const oracle::Ring o(r);
    for (const auto& a : o.ms)
        for (const auto& al : o.gs)
            for (const auto& be : o.gs)
                for (const auto& c : o.ms)
                    for (const auto& b : o.ms) {
                        const auto expect =
                            o.sub(o.prod(o.prod(a, al, c), be, b), o.prod(o.prod(a, be, c), al, b));
                        CHECK(gamma_bracket(r, el(a), el(al), el(be), el(c), el(b)).coords == expect);
                    }
    // E11 [E11, E21]_{E11} E12 = E12
    CHECK(gamma_bracket(r, el({1, 0}), el({1, 0}), el({0, 1}), el({1, 0}), el({0, 1})) == el({0, 0}));
    CHECK(gamma_bracket(r, el({1, 0}), el({1, 0}), el({0, 1}), el({0, 1}), el({1, 0})) == el({1, 0}));
}

TEST_CASE("commutator expansions vanish on every tuple") {
    for (const auto& ring : {rect_matrix_instance(1, 2, 2), z2_instance(), dual_numbers_instance()}) {
        const auto ms = enumerate_elements(ring.m());
        const auto gs = enumerate_elements(ring.gamma());
        for (auto side : {ExpansionSide::left, ExpansionSide::right})
            for (const auto& a : ms)
                for (const auto& b : ms)
                    for (const auto& c : ms)
                        for (const auto& al : gs)
                            for (const auto& be : gs) {
                                const auto res = commutator_expansion_residual(ring, side, a, b, c, al, be);
                                CHECK(res.is_zero());
                                CHECK(res.inputs.size() == 5);
                            }
    }
}

TEST_CASE("dropping the extra term breaks the expansion") {
    // Without b beta a alpha c - b alpha a beta c the left formula fails on
    // rect(1,2;2), so the residual must see the term.
    const auto r = rect_matrix_instance(1, 2, 2);
    const oracle::Ring o(r);
    bool term_matters = false;
    for (const auto& a : o.ms)
        for (const auto& b : o.ms)
            for (const auto& c : o.ms)
                for (const auto& al : o.gs)
                    for (const auto& be : o.gs) {
                        const auto extra =
                            o.sub(o.prod(o.prod(b, be, a), al, c), o.prod(o.prod(b, al, a), be, c));
                        term_matters = term_matters || extra != o.zero();
                    }
    CHECK(term_matters);
}

TEST_CASE("copies share equality and names are cosmetic") {
    const auto a = rect_matrix_instance(1, 2, 2);
    const auto b = a.with_name("other");
    CHECK(a == b);
    CHECK(b.name() == "other");
    CHECK(a.tensor()[0][0][0] == el({1, 0}));
    CHECK(a.flat_tensor().size() == 8);
}
