#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tollwalk/axioms.hpp"
#include "tollwalk/catalog.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/toll.hpp"
#include "tollwalk/transit.hpp"

using namespace tollwalk;

namespace {

TransitFunction random_transit(int n, double p, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0, 1);
    std::map<std::pair<int, int>, std::vector<int>> entries;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<int> m{a, b};
            for (int c = 0; c < n; ++c)
                if (c != a && c != b && unit(rng) < p) m.push_back(c);
            entries[{a, b}] = m;
        }
    return make_transit_function(n, entries, false);
}

}  // namespace

TEST_CASE("construction validates t1 and t3") {
    CHECK_THROWS_AS(make_transit_function(3, {{{0, 1}, {0}}}), contract_error);
    CHECK_THROWS_AS(make_transit_function(3, {{{0, 0}, {0, 1}}}), contract_error);
    CHECK_THROWS_AS(make_transit_function(3, {{{0, 1}, {0, 1, 3}}}), contract_error);
    // Conflicting duplicate under pair symmetry.
    CHECK_THROWS_AS(
        make_transit_function(3, {{{0, 1}, {0, 1}}, {{1, 0}, {0, 1, 2}}}),
        contract_error);
    // Missing pairs are rejected without defaults.
    CHECK_THROWS_AS(make_transit_function(3, {}, false), contract_error);

    TransitFunction r = make_transit_function(3, {{{0, 2}, {0, 1, 2}}});
    CHECK(r.at(0, 1) == VertexSet::of(3, {0, 1}));  // defaulted
    CHECK(r.at(2, 0) == VertexSet::of(3, {0, 1, 2}));
    CHECK(r.at(1, 1) == VertexSet::of(3, {1}));
}

TEST_CASE("transit text round trip") {
    TransitFunction r = make_transit_function(4, {{{0, 2}, {0, 1, 2}},
                                                  {{1, 3}, {0, 1, 2, 3}}});
    TransitFunction back = parse_transit_function(to_transit_text(r));
    CHECK(back == r);
    CHECK_THROWS_AS(parse_transit_function("3\n0 1 : 0\n"), parse_error);
    CHECK_THROWS_AS(parse_transit_function("3\n0 1 : 0 1\n1 0 : 0 1 2\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_transit_function(""), parse_error);
}

TEST_CASE("underlying graph reads trivial pairs as edges") {
    TransitFunction r = make_transit_function(3, {{{0, 2}, {0, 1, 2}}});
    Graph g = underlying_graph(r);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("axiom names round trip") {
    for (AxiomId id : all_axioms()) {
        auto back = axiom_by_name(axiom_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(axiom_by_name("b9").has_value());
    CHECK(axiom_name(AxiomId::b1p) == "b1p");
    CHECK(axiom_name(AxiomId::TW1p) == "TW1p");
}

TEST_CASE("witness determinism: C4 and JC") {
    TransitFunction t = toll_transit(catalog("C4"));
    AxiomVerdict v = check_axiom(t, AxiomId::JC);
    CHECK_FALSE(v.satisfied);
    // Four consecutive cycle vertices, least tuple first.
    CHECK(v.witness == std::vector<int>{0, 1, 2, 3});
    CHECK(v.witness_names == std::vector<std::string>{"u", "x", "y", "v"});
    AxiomVerdict again = check_axiom(t, AxiomId::JC);
    CHECK(again.witness == v.witness);
}

TEST_CASE("tr detects triangles") {
    CHECK_FALSE(check_axiom(toll_transit(catalog("complete:3")), AxiomId::tr).satisfied);
    CHECK(check_axiom(toll_transit(catalog("C5")), AxiomId::tr).satisfied);
    CHECK(check_axiom(toll_transit(catalog("path:4")), AxiomId::tr).satisfied);
}

TEST_CASE("SP on cycles and paths") {
    CHECK(check_axiom(toll_transit(catalog("cycle:6")), AxiomId::SP).satisfied);
    CHECK_FALSE(check_axiom(toll_transit(catalog("path:4")), AxiomId::SP).satisfied);
}

TEST_CASE("axiom implications on random transit functions") {
    std::mt19937 rng(99);
    int j0_hits = 0, j3_hits = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        TransitFunction r = random_transit(3 + trial % 2, 0.35, rng);
        // (J0) is (JC) without the distinctness guards, so it is stronger.
        if (check_axiom(r, AxiomId::J0).satisfied) {
            ++j0_hits;
            CHECK(check_axiom(r, AxiomId::JC).satisfied);
        }
        // (J3) forces the (J4) and (J4') conclusions wherever they apply.
        if (check_axiom(r, AxiomId::J3).satisfied) {
            ++j3_hits;
            CHECK(check_axiom(r, AxiomId::J4).satisfied);
            CHECK(check_axiom(r, AxiomId::J4p).satisfied);
        }
    }
    CHECK(j0_hits > 0);  // the premise fired at least sometimes
    CHECK(j3_hits > 0);
}

TEST_CASE("check_axioms covers requested list in order") {
    TransitFunction t = toll_transit(catalog("C4"));
    auto verdicts = check_axioms(t, {AxiomId::J2, AxiomId::JC});
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0].axiom == AxiomId::J2);
    CHECK(verdicts[0].satisfied);
    CHECK(verdicts[1].axiom == AxiomId::JC);
    CHECK_FALSE(verdicts[1].satisfied);
    CHECK_FALSE(satisfies_all(t, {AxiomId::J2, AxiomId::JC}));
    CHECK(satisfies_all(t, {AxiomId::J2}));
}
