#include "doctest.h"

#include "gammaring/instances.hpp"
#include "gammaring/structure.hpp"
#include "gammaring/theorems.hpp"
#include "oracles.hpp"

using namespace gammaring;

namespace {

GroupElement el(std::vector<Coord> c) { return GroupElement{std::move(c)}; }

} // namespace

TEST_CASE("theorem and target names") {
    for (TheoremId id : kAllTheorems) CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK(parse_theorem_id("cor-prime-scp-identity") == TheoremId::cor_prime_scp_identity);
    CHECK_FALSE(parse_theorem_id("lemma"));
    CHECK(parse_search_target("left-derivation-not-central") == SearchTarget::left_derivation_not_central);
    CHECK(to_string(SearchTarget::scp_endo_defect_not_central) == "scp_endo_defect_not_central");
}

TEST_CASE("first remark") {
    const auto dual = dual_numbers_instance();
    // delta(1) = 0, delta(t) = 1
    const auto delta = make_additive_map(dual.m(), dual.m(), {el({0, 0}), el({1, 0})});
    REQUIRE(check_role(dual, delta, MapRole::left_derivation).verdict);
    const auto r = verify_remark_left_derivation(dual, delta);
    CHECK(r.verdict);
    CHECK(r.counters.at("pairs") == 4 * 4 * 2);
    CHECK(r.counters.at("tuples") == 4 * 4 * 4 * 2 * 2);
    CHECK_FALSE(r.seed);

    for (const auto& ring : builtin_instances())
        CHECK(verify_remark_left_derivation(ring, zero_map(ring.m(), ring.m())).verdict);

    const auto rect = rect_matrix_instance(1, 2, 2);
    const auto swap = make_additive_map(rect.m(), rect.m(), {el({0, 1}), el({1, 0})});
    CHECK_THROWS_AS(verify_remark_left_derivation(rect, swap), NotLeftDerivation);
}

TEST_CASE("first remark samples above the limit") {
    const auto dual = dual_numbers_instance();
    VerifyOptions o;
    o.exhaustive_tuples = 100;
    o.sample_count = 500;
    o.seed = 9;
    const auto delta = make_additive_map(dual.m(), dual.m(), {el({0, 0}), el({1, 0})});
    const auto r = verify_remark_left_derivation(dual, delta, o);
    CHECK(r.verdict);
    CHECK(r.counters.at("pairs") == 32);
    CHECK(r.counters.at("sampled_tuples") == 500);
    CHECK(r.seed == 9u);
    o.allow_sampling = false;
    CHECK_THROWS_AS(verify_remark_left_derivation(dual, delta, o), CapExceeded);
}

TEST_CASE("second remark") {
    CHECK(verify_center_permutation(z2_instance(), 3).verdict);
    const auto rect = verify_center_permutation(rect_matrix_instance(1, 2, 2), 3);
    CHECK(rect.verdict);
    CHECK(rect.counters.at("center_order") == 1);
    CHECK(rect.counters.at("n3_checks") == 4 * 4 * 4 * 4 * 4 * 4 * 6 * 3);
    const auto dual = verify_center_permutation(dual_numbers_instance(), 2);
    CHECK(dual.verdict);
    CHECK(dual.counters.at("n2_checks") == 4 * 16 * 4 * 2 * 2);
    CHECK_THROWS_AS(verify_center_permutation(z2_instance(), 0), GammaError);

    VerifyOptions o;
    o.exhaustive_n_max = 1;
    o.sample_count = 1000;
    o.seed = 3;
    const auto s = verify_center_permutation(dual_numbers_instance(), 3, o);
    CHECK(s.verdict);
    CHECK(s.counters.at("n2_sampled") == 1000);
    CHECK(s.counters.at("n3_sampled") == 1000);
    CHECK(s.seed == 3u);
    CHECK(verify_center_permutation(dual_numbers_instance(), 3, o).counters == s.counters);
    o.allow_sampling = false;
    CHECK_THROWS_AS(verify_center_permutation(dual_numbers_instance(), 2, o), CapExceeded);
}

TEST_CASE("left derivations and the center") {
    const auto rect = verify_left_derivations_central(rect_matrix_instance(1, 2, 2));
    CHECK(rect.verdict);
    CHECK(rect.hypothesis("semiprime") == true);
    CHECK(rect.counters.at("left_derivations") == 1);

    const auto dual = verify_left_derivations_central(dual_numbers_instance());
    CHECK(dual.verdict);
    CHECK(dual.hypothesis("semiprime") == false);
    CHECK(dual.counters.at("left_derivations") == 4);

    CHECK(verify_left_derivations_central(frobenius_example().ring).verdict);
}

TEST_CASE("prime corollary") {
    const auto rect = verify_prime_left_derivation(rect_matrix_instance(1, 2, 2));
    CHECK(rect.verdict);
    CHECK(rect.hypothesis("prime") == true);
    CHECK(rect.hypothesis("commutative") == false);
    CHECK(rect.counters.count("nonzero_left_derivations") == 0);

    CHECK(verify_prime_left_derivation(z2_instance()).verdict);

    const auto zz = verify_prime_left_derivation(direct_product(z2_instance(), z2_instance()));
    CHECK(zz.verdict);
    CHECK(zz.hypothesis("prime") == false);
    REQUIRE(zz.notes.size() == 1);
    CHECK(zz.notes.front().find("vacuous") == 0);
}

TEST_CASE("scp derivations") {
    const auto rect = verify_scp_derivation(rect_matrix_instance(1, 2, 2));
    CHECK(rect.verdict);
    CHECK(rect.counters.at("scp_derivations") == 0);
    const auto z2 = verify_scp_derivation(z2_instance());
    CHECK(z2.verdict);
    CHECK(z2.counters.at("scp_derivations") == 1);
    const auto analog = verify_scp_derivation(frobenius_example().ring);
    CHECK(analog.verdict);
    CHECK(analog.counters.at("scp_derivations") == 0);
}

TEST_CASE("scp endomorphisms") {
    const auto rect = verify_scp_endomorphism(rect_matrix_instance(1, 2, 2));
    CHECK(rect.verdict);
    CHECK(rect.counters.at("scp_endomorphisms") == 1);
    const auto analog = verify_scp_endomorphism(frobenius_example().ring);
    CHECK(analog.verdict);
    CHECK(analog.counters.at("scp_endomorphisms") == 3);
    for (const auto& ring : {z2_instance(), dual_numbers_instance(), direct_product(z2_instance(), z2_instance())})
        CHECK(verify_scp_endomorphism(ring).verdict);
}

TEST_CASE("prime scp corollary") {
    const auto rect = verify_prime_scp_identity(rect_matrix_instance(1, 2, 2));
    CHECK(rect.verdict);
    CHECK(rect.hypothesis("non_identity_scp_endomorphism") == false);
    const auto z2 = verify_prime_scp_identity(z2_instance());
    CHECK(z2.verdict);
    CHECK(z2.notes.front() == "vacuous: commutative");
    const auto analog = verify_prime_scp_identity(frobenius_example().ring);
    CHECK(analog.verdict);
    CHECK(analog.hypothesis("prime") == false);
    CHECK(analog.hypothesis("non_identity_scp_endomorphism") == true);
}

TEST_CASE("failing hypotheses") {
    const auto dual = dual_numbers_instance();
    CHECK(failing_hypothesis(dual, TheoremId::thm_left_derivation_central) == "semiprime");
    CHECK(failing_hypothesis(dual, TheoremId::cor_prime_left_derivation) == "prime");
    CHECK_FALSE(failing_hypothesis(dual, TheoremId::remark_center_permutation));
    CHECK(failing_hypothesis(z2_instance(), TheoremId::cor_prime_scp_identity) == "noncommutative");
    for (TheoremId id : kAllTheorems) CHECK_FALSE(failing_hypothesis(rect_matrix_instance(1, 2, 2), id));
}

TEST_CASE("every verifier holds on the built-ins") {
    for (const auto& ring : builtin_instances()) {
        CAPTURE(ring.name());
        for (TheoremId id : kAllTheorems) {
            if (id == TheoremId::remark_center_permutation && ring.m().order() > 16) continue;
            CAPTURE(to_string(id));
            const auto r = verify_theorem(ring, id);
            CHECK(r.verdict);
            CHECK_FALSE(r.falsification);
        }
    }
}

TEST_CASE("search finds nothing where the theorems apply") {
    SearchConfig semiprime;
    for (const auto& ring : builtin_instances())
        if (is_semiprime(ring).verdict) semiprime.instances.push_back(ring);
    const auto a = search_counterexample(semiprime);
    CHECK(a.verdict);
    CHECK(a.counters.at("instances") == semiprime.instances.size());
    CHECK(a.hypothesis("budget_exhausted") == false);

    SearchConfig analog;
    analog.target = SearchTarget::scp_endo_defect_not_central;
    analog.instances = {frobenius_example().ring};
    CHECK(search_counterexample(analog).verdict);

    SearchConfig noncomm;
    noncomm.target = SearchTarget::scp_derivation_on_noncommutative;
    noncomm.instances = semiprime.instances;
    CHECK(search_counterexample(noncomm).verdict);
}

TEST_CASE("search on generated instances without semiprimeness") {
    SearchConfig cfg;
    cfg.random = RandomSource{1, 100, {}};
    cfg.node_budget = 1'000'000;
    const auto r = search_counterexample(cfg);
    CHECK(r.seed == 1u);
    CHECK(r.hypothesis("budget_exhausted") == false);
    REQUIRE_FALSE(r.verdict);
    CHECK_FALSE(r.falsification);
    const auto& w = r.witnesses.front();
    CHECK(w.kind == "left_derivation_not_central");

    // Replay the witness with the oracles.
    const auto ring = random_instance(cfg.random->seed + r.counters.at("instances") - 1);
    CHECK(ring.name() == w.instance);
    const oracle::Ring o(ring);
    oracle::Map f;
    for (std::size_t i = 0; i < ring.m().rank(); ++i) f.images.push_back(w.find("image_e" + std::to_string(i))->coords);
    CHECK(oracle::holds(o, f, oracle::Role::left_derivation));
    CHECK_FALSE(oracle::maps_into_center(o, f));
    CHECK_FALSE(oracle::semiprime(o));

    const auto again = search_counterexample(cfg);
    CHECK(again.witnesses == r.witnesses);
    CHECK(again.counters == r.counters);
}

TEST_CASE("search budget exhaustion is reported, not thrown") {
    SearchConfig cfg;
    cfg.instances = {frobenius_example().ring};
    cfg.target = SearchTarget::scp_endo_defect_not_central;
    cfg.node_budget = 10;
    const auto r = search_counterexample(cfg);
    CHECK(r.verdict);
    CHECK(r.hypothesis("budget_exhausted") == true);
    CHECK(r.counters.at("nodes") == 10);
    cfg.node_budget = 0;
    CHECK_THROWS_AS(search_counterexample(cfg), GammaError);
}
