#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tollwalk/catalog.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/fixtures.hpp"
#include "tollwalk/toll.hpp"

using namespace tollwalk;

TEST_CASE("fixture range") {
    CHECK_THROWS_AS(fixture(0), contract_error);
    CHECK_THROWS_AS(fixture(10), contract_error);
}

TEST_CASE("all nine fixtures reproduce their stated verdicts") {
    for (int k = 1; k <= 9; ++k) {
        INFO("fixture ", k);
        Fixture f = fixture(k);
        CHECK(int(f.labels.size()) == f.r.universe_size());
        for (AxiomId id : f.expected_satisfied) {
            INFO("expected satisfied: ", axiom_name(id));
            AxiomVerdict v = check_axiom(f.r, id);
            CHECK(v.satisfied);
        }
        for (AxiomId id : f.expected_violated) {
            INFO("expected violated: ", axiom_name(id));
            AxiomVerdict v = check_axiom(f.r, id);
            CHECK_FALSE(v.satisfied);
            CHECK_FALSE(v.witness.empty());
            CHECK(v.witness.size() == v.witness_names.size());
        }
    }
}

TEST_CASE("fixture 9 is the toll walk transit function of the 3-fan") {
    Fixture f = fixture(9);
    CHECK(f.r == toll_transit(catalog("fan3")));
}

TEST_CASE("independence: each fixture separates some axiom pair") {
    // Every fixture must actually distinguish something: at least one axiom
    // satisfied and at least one violated.
    for (int k = 1; k <= 9; ++k) {
        Fixture f = fixture(k);
        CHECK_FALSE(f.expected_satisfied.empty());
        CHECK_FALSE(f.expected_violated.empty());
    }
}
