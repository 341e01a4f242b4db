#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "tollwalk/catalog.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/recognizers.hpp"

using namespace tollwalk;

namespace {

std::map<std::string, std::vector<int>> load_degree_fixture() {
    std::ifstream in(std::string(TOLLWALK_TEST_DATA_DIR) + "/catalog_degrees.txt");
    REQUIRE(in.good());
    std::map<std::string, std::vector<int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.rfind(':');
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> degs;
        int d;
        while (rest >> d) degs.push_back(d);
        out[line.substr(0, colon)] = degs;
    }
    return out;
}

}  // namespace

TEST_CASE("degree-sequence checksums match the transcriptions") {
    auto fixture = load_degree_fixture();
    CHECK(fixture.size() == 33);
    for (auto& [name, degs] : fixture) {
        INFO("pattern ", name);
        CHECK(catalog(name).degree_sequence() == degs);
    }
}

TEST_CASE("basic shapes") {
    Graph house = catalog("house");
    CHECK(house.vertex_count() == 5);
    CHECK(house.edge_count() == 6);
    CHECK(house.vertex_by_label("u").has_value());

    Graph domino = catalog("domino");
    CHECK(domino.vertex_count() == 6);
    CHECK(domino.edge_count() == 7);

    Graph fan = catalog("fan3");
    CHECK(fan.vertex_count() == 5);
    CHECK(fan.edge_count() == 7);
    int z = *fan.vertex_by_label("z");
    CHECK(fan.degree(z) == 4);

    CHECK(catalog("path:1").vertex_count() == 1);
    CHECK(catalog("cycle:3").edge_count() == 3);
    CHECK(catalog("complete:5").edge_count() == 10);
    CHECK(catalog("C4") == catalog("cycle:4"));
    CHECK(catalog("Ck:7") == catalog("cycle:7"));
    CHECK(catalog("hole:5") == catalog("cycle:5"));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(catalog("nosuch"), contract_error);
    CHECK_THROWS_AS(catalog("path:0"), contract_error);
    CHECK_THROWS_AS(catalog("cycle:2"), contract_error);
    CHECK_THROWS_AS(catalog("Ck:3"), contract_error);
    CHECK_THROWS_AS(catalog("hole:4"), contract_error);
    CHECK_THROWS_AS(catalog("path:x"), contract_error);
    CHECK_THROWS_AS(catalog("F2:0"), contract_error);
}

TEST_CASE("the 3-fan is F2:4 up to labels") {
    Graph a = catalog("fan3"), b = catalog("F2:4");
    // Same adjacency under the documented vertex orders.
    CHECK(a.vertex_count() == b.vertex_count());
    CHECK(a.edges() == b.edges());
}

TEST_CASE("F and XF family shapes") {
    Graph f3 = catalog("F3:4");
    CHECK(f3.vertex_count() == 6);
    CHECK(f3.has_edge(*f3.vertex_by_label("y1"), *f3.vertex_by_label("y2")));
    Graph f4 = catalog("F4:4");
    CHECK_FALSE(f4.has_edge(*f4.vertex_by_label("y1"), *f4.vertex_by_label("y2")));

    Graph xf2 = catalog("XF2:3");
    CHECK(xf2.vertex_count() == 3 + 1 + 3);
    CHECK(xf2.degree(*xf2.vertex_by_label("x")) == 1);
    Graph xf3 = catalog("XF3:3");
    CHECK(xf3.vertex_count() == 3 + 2 + 3);
    CHECK(xf3.degree(*xf3.vertex_by_label("x")) == 2);
}

TEST_CASE("marked u,v,x of each forbidden pattern is an asteroidal triple") {
    auto leg = [](const Graph& g, int a, int b, int w) {
        VertexSet blocked = g.closed_neighborhood(w);
        if (blocked.contains(a) || blocked.contains(b)) return false;
        return reachable_from(g, a, blocked).contains(b);
    };
    std::vector<std::string> names = {"T2", "X2", "X3"};
    for (int i = 30; i <= 41; ++i) names.push_back("X" + std::to_string(i));
    for (const char* fam : {"XF2:2", "XF2:3", "XF3:1", "XF3:2", "XF4:1", "XF4:2"})
        names.push_back(fam);
    for (auto& name : names) {
        INFO("pattern ", name);
        Graph g = catalog(name);
        CHECK_FALSE(is_at_free(g).member);
        int u = *g.vertex_by_label("u");
        int v = *g.vertex_by_label("v");
        int x = *g.vertex_by_label("x");
        CHECK(leg(g, u, v, x));
        CHECK(leg(g, u, x, v));
        CHECK(leg(g, v, x, u));
    }
}

TEST_CASE("catalog_names all resolve") {
    for (auto& name : catalog_names()) {
        INFO("pattern ", name);
        CHECK_NOTHROW(catalog(name));
    }
}
