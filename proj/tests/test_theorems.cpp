#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tollwalk/catalog.hpp"
#include "tollwalk/enumerate.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/theorems.hpp"

using namespace tollwalk;

TEST_CASE("builtin enumeration counts") {
    const int expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(int(enumerate_connected(n).size()) == expected[n - 1]);
    }
    CHECK(enumerate_connected_up_to(4).size() == 1 + 1 + 2 + 6);
    CHECK_THROWS_AS(enumerate_connected(8), contract_error);
}

TEST_CASE("binding table lookups") {
    CHECK(theorem_bindings().size() == 16);
    auto chordal = theorem_by_id("thm-jc-chordal");
    REQUIRE(chordal.has_value());
    CHECK(chordal->kind == TheoremKind::iff);
    CHECK(chordal->axioms == std::vector<AxiomId>{AxiomId::JC});
    CHECK(chordal->graph_class == "chordal");

    auto jcb2 = theorem_by_id("prop-jc-implies-b2");
    REQUIRE(jcb2.has_value());
    CHECK(jcb2->kind == TheoremKind::implication);
    CHECK(jcb2->graph_class.empty());
    CHECK(jcb2->hyp_axioms == std::vector<AxiomId>{AxiomId::JC});

    auto chd = theorem_by_id("char-dh");
    REQUIRE(chd.has_value());
    CHECK(chd->kind == TheoremKind::characterization);
    CHECK(chd->axioms.size() == 7);

    CHECK_FALSE(theorem_by_id("thm-bogus").has_value());
    CHECK_THROWS_AS(verify_theorem("thm-bogus", catalog("C4")), contract_error);
}

TEST_CASE("single-graph verdicts") {
    TheoremCheck c = verify_theorem("thm-jc-chordal", catalog("C4"));
    CHECK_FALSE(c.left);
    CHECK_FALSE(c.right);
    CHECK(c.agree);

    c = verify_theorem("thm-jc-chordal", catalog("complete:4"));
    CHECK(c.left);
    CHECK(c.right);

    c = verify_theorem("lem-tr-trianglefree", catalog("complete:3"));
    CHECK_FALSE(c.left);
    CHECK_FALSE(c.right);
    CHECK(c.agree);

    // Implication with a false hypothesis is vacuously fine.
    c = verify_theorem("prop-chordal-twc", catalog("C5"));
    CHECK_FALSE(c.left);
    CHECK(c.right);
    CHECK(c.agree);
    c = verify_theorem("prop-chordal-twc", catalog("fan3"));
    CHECK(c.left);
    CHECK(c.right);
}

TEST_CASE("sweeps up to n = 5 find no disagreement") {
    for (const auto& b : theorem_bindings()) {
        INFO("id ", b.id);
        EquivalenceReport rep = sweep(b.id, 5);
        CHECK(rep.graphs_checked == 31);
        CHECK(rep.disagreements.empty());
        if (b.kind == TheoremKind::implication) {
            // Trees satisfy every hypothesis class we bind, so the
            // hypothesis fires on at least the 1-, 2- and 3-vertex trees.
            CHECK(rep.hypothesis_count >= 3);
            CHECK(rep.hypothesis_count <= rep.graphs_checked);
        }
    }
}

TEST_CASE("parallel sweep matches the sequential report") {
    EquivalenceReport seq = sweep("char-chordal", 5, 1);
    EquivalenceReport par = sweep("char-chordal", 5, 4);
    CHECK(par.graphs_checked == seq.graphs_checked);
    CHECK(par.hypothesis_count == seq.hypothesis_count);
    CHECK(par.disagreements.empty());
}

TEST_CASE("converse probing on tiny universes") {
    for (const char* id : {"char-chordal", "char-tree"}) {
        INFO("id ", id);
        ConverseReport rep = probe_converse(id, 800, 4, 4242);
        CHECK(rep.trials == 800);
        CHECK(rep.satisfying > 0);
        CHECK(rep.falsifications.empty());
    }
    CHECK_THROWS_AS(probe_converse("prop-chordal-twc", 10, 4, 1), contract_error);
}

TEST_CASE("induced path lemma variants") {
    for (const char* variant : {"easy1", "easy", "easydh"}) {
        INFO("variant ", variant);
        // Chordal + distance-hereditary graphs satisfy every hypothesis set.
        for (const char* name : {"path:5", "complete:4", "fan3"}) {
            PathLemmaReport rep = induced_path_lemma_check(catalog(name), variant);
            if (rep.hypothesis_holds) CHECK(rep.conclusion_holds);
        }
    }
    PathLemmaReport p5 = induced_path_lemma_check(catalog("path:5"), "easy1");
    CHECK(p5.hypothesis_holds);
    CHECK(p5.conclusion_holds);
    // C6 violates TW2, so the easy1 hypothesis fails there.
    PathLemmaReport c6 = induced_path_lemma_check(catalog("cycle:6"), "easy1");
    CHECK_FALSE(c6.hypothesis_holds);
    CHECK_THROWS_AS(induced_path_lemma_check(catalog("C4"), "bogus"), contract_error);
}

TEST_CASE("lemma conclusions hold wherever hypotheses do, n <= 5") {
    for (const Graph& g : enumerate_connected_up_to(5)) {
        for (const char* variant : {"easy1", "easy", "easydh"}) {
            PathLemmaReport rep = induced_path_lemma_check(g, variant);
            if (rep.hypothesis_holds) {
                INFO("graph ", to_graph6(g), " variant ", std::string(variant), " ",
                     rep.detail);
                CHECK(rep.conclusion_holds);
            }
        }
    }
}
