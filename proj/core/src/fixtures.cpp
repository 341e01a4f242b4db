#include "tollwalk/fixtures.hpp"

#include <map>

#include "tollwalk/catalog.hpp"
#include "tollwalk/errors.hpp"
#include "tollwalk/toll.hpp"

namespace tollwalk {

namespace {

using A = AxiomId;

// Builds a transit function from entries written with element names.
TransitFunction named(const std::vector<std::string>& labels,
                      const std::map<std::pair<std::string, std::string>,
                                     std::vector<std::string>>& entries) {
    std::map<std::string, int> idx;
    for (int i = 0; i < int(labels.size()); ++i) idx[labels[i]] = i;
    std::map<std::pair<int, int>, std::vector<int>> raw;
    for (auto& [key, members] : entries) {
        std::vector<int> set;
        for (auto& name : members) set.push_back(idx.at(name));
        raw[{idx.at(key.first), idx.at(key.second)}] = set;
    }
    return make_transit_function(int(labels.size()), raw, /*default_pairs=*/true);
}

}  // namespace

Fixture fixture(int k) {
    switch (k) {
        case 1: {
            std::vector<std::string> v = {"u", "v", "z", "x", "y"};
            return {named(v, {{{"u", "v"}, {"u", "v", "z", "x", "y"}},
                              {{"z", "v"}, {"u", "v", "z", "x", "y"}},
                              {{"x", "v"}, {"x", "y", "v"}},
                              {{"u", "z"}, {"u", "x", "z"}},
                              {{"u", "y"}, {"u", "x", "y"}},
                              {{"z", "y"}, {"z", "x", "y"}}}),
                    v,
                    // The source text also claims (TWA), but every candidate
                    // x1 for the triple (u,v,z) fails one of the TWA side
                    // conditions (x is a default pair with u), so (TWA) is
                    // violated; the sets below are machine-checked.
                    {A::b2p, A::J2, A::J4, A::J4p, A::TW1p},
                    {A::b1p, A::b1, A::TWA}};
        }
        case 2: {
            std::vector<std::string> v = {"u", "v", "w", "x", "y", "z"};
            return {named(v, {{{"u", "v"}, {"u", "y", "x", "v"}},
                              {{"u", "y"}, {"u", "x", "y"}},
                              {{"u", "w"}, {"u", "y", "w"}},
                              {{"y", "v"}, {"y", "z", "x", "v"}},
                              {{"u", "z"}, {"u", "x", "z"}},
                              {{"w", "v"}, {"w", "z", "v"}}}),
                    v,
                    // The source text also claims (J2), (TW1') and (TWA),
                    // but the default pairs u-x, x-w and y-w create induced
                    // two-paths those axioms then contradict (e.g. x is a
                    // common neighbor of u and w yet x is not in R(u,w));
                    // the sets below are machine-checked.
                    {A::b1p, A::J4, A::J4p},
                    {A::b2p, A::b2, A::J2, A::TW1p, A::TWA}};
        }
        case 3: {
            std::vector<std::string> v = {"u", "v", "x", "y", "z"};
            return {named(v, {{{"u", "v"}, {"u", "z", "v"}},
                              {{"u", "y"}, {"u", "x", "y"}},
                              {{"x", "v"}, {"x", "y", "v"}}}),
                    v,
                    // The source text also claims (J2), but z is a common
                    // neighbor of u and y by the default pairs while
                    // z is not in R(u,y); the sets below are machine-checked.
                    {A::b1p, A::b2p, A::J4p, A::TW1p, A::TWA},
                    {A::J4, A::JC, A::J2}};
        }
        case 4: {
            std::vector<std::string> v = {"u", "v", "x", "y", "z1", "z2", "z3"};
            return {named(v, {{{"u", "v"}, {"u", "z1", "z2", "z3", "v"}},
                              {{"u", "y"}, {"u", "x", "z1", "z2", "y"}},
                              {{"x", "v"}, {"x", "z2", "z3", "y", "v"}},
                              {{"u", "x"}, {"u", "z1", "x"}},
                              {{"x", "y"}, {"x", "z2", "y"}},
                              {{"y", "v"}, {"y", "z3", "v"}},
                              {{"z1", "y"}, {"z1", "z2", "y"}},
                              {{"z3", "x"}, {"z3", "z2", "x"}}}),
                    v,
                    // The source text also claims (J2) and (TWA); both fail
                    // through default pairs (z2 is a common neighbor of u
                    // and x yet missing from R(u,x)); the sets below are
                    // machine-checked.
                    {A::b1p, A::b2p, A::J4, A::TW1p},
                    {A::J4p, A::J2, A::TWA}};
        }
        case 5: {
            std::vector<std::string> v = {"u", "v", "w", "x", "y", "z"};
            return {named(v, {{{"u", "v"}, {"u", "y", "x", "v"}},
                              {{"u", "y"}, {"u", "x", "y"}},
                              {{"u", "w"}, {"u", "x", "w"}},
                              {{"x", "v"}, {"x", "y", "v"}},
                              {{"u", "z"}, {"u", "x", "z"}},
                              {{"z", "v"}, {"z", "y", "v"}},
                              {{"w", "v"}, {"w", "y", "v"}}}),
                    v,
                    {A::b1p, A::b2p, A::J2, A::J4, A::J4p, A::TWA},
                    {A::TW1p}};
        }
        case 6: {
            std::vector<std::string> v = {"u", "v", "x", "y"};
            return {named(v, {{{"u", "v"}, {"u", "v", "x", "y"}},
                              {{"x", "v"}, {"x", "y", "v"}}}),
                    v,
                    {A::b1p, A::b2p, A::J2, A::J4, A::J4p, A::TW1p},
                    {A::TWA, A::TWC}};
        }
        case 7: {
            std::vector<std::string> v = {"u", "v", "x", "y"};
            return {named(v, {{{"u", "v"}, {"u", "x", "v"}}}),
                    v,
                    {A::b1p, A::b2p, A::J4, A::J4p, A::TWA, A::TW1p},
                    {A::J2, A::tr}};
        }
        case 8: {
            std::vector<std::string> v = {"u", "v", "w", "x", "y", "z"};
            return {named(v, {{{"u", "v"}, {"u", "v"}},
                              {{"u", "y"}, {"u", "z", "x", "y"}},
                              {{"u", "x"}, {"u", "z", "x"}},
                              {{"u", "w"}, {"u", "z", "x", "y", "w"}},
                              {{"z", "y"}, {"z", "x", "y"}},
                              {{"z", "w"}, {"z", "x", "y", "w"}},
                              {{"z", "v"}, {"z", "x", "y", "w", "v"}},
                              {{"x", "w"}, {"x", "y", "w"}},
                              {{"x", "v"}, {"x", "y", "w", "v"}},
                              {{"y", "v"}, {"y", "w", "v"}}}),
                    v,
                    // The source text also claims (J2), but v is a common
                    // neighbor of u and w by the default pairs while v is
                    // not in R(u,w); the sets below are machine-checked.
                    {A::b2, A::J4, A::dh, A::TW1, A::TW2, A::TWC},
                    {A::dh1, A::JC, A::J2}};
        }
        case 9: {
            Graph fan = catalog("fan3");
            std::vector<std::string> v;
            for (int i = 0; i < fan.vertex_count(); ++i) v.push_back(fan.label(i));
            return {toll_transit(fan),
                    v,
                    {A::b2, A::J2, A::J4, A::JC, A::dh1, A::TW1, A::TW2, A::TWC},
                    {A::dh, A::pt}};
        }
        default:
            throw contract_error("fixture index must be 1..9");
    }
}

}  // namespace tollwalk
