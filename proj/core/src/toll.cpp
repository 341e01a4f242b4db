#include "tollwalk/toll.hpp"

#include <map>
#include <vector>

#include "tollwalk/errors.hpp"

namespace tollwalk {

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw contract_error("requires connected graph");
}

void require_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw contract_error("vertex out of range");
}

}  // namespace

VertexSet toll_interval(const Graph& g, int u, int v) {
    require_connected(g);
    require_vertex(g, u);
    require_vertex(g, v);
    int n = g.vertex_count();
    VertexSet members(n);
    members.insert(u);
    members.insert(v);
    if (u == v || g.has_edge(u, v)) return members;
    VertexSet nu = g.closed_neighborhood(u);
    VertexSet nv = g.closed_neighborhood(v);
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        VertexSet su = nu;
        su.erase(w);
        if (separates(g, su, w, v)) continue;
        VertexSet sv = nv;
        sv.erase(w);
        if (!separates(g, sv, w, u)) members.insert(w);
    }
    return members;
}

VertexSet toll_interval_oracle(const Graph& g, int u, int v) {
    require_connected(g);
    require_vertex(g, u);
    require_vertex(g, v);
    if (u == v || g.has_edge(u, v))
        throw contract_error("oracle handles only distinct non-adjacent pairs");
    int n = g.vertex_count();
    VertexSet members(n);
    members.insert(u);
    members.insert(v);
    // A neighbor of u may appear in a toll u,v-walk only as the second
    // vertex and a neighbor of v only as the second-to-last, so the walk is
    // u, a, z_1 ... z_m, b, v with a gate a in N(u) - N[v], a gate b in
    // N(v) - N[u], and every z_j outside both closed neighborhoods (m = 0
    // needs the edge ab).  The lone exception is u, w, v through a common
    // neighbor w.  The interior z_1 ... z_m is an arbitrary walk, so the
    // visitable vertices form whole components of the outside region that
    // touch both gates.
    members |= g.neighbors(u) & g.neighbors(v);
    VertexSet outside(n);
    for (int w = 0; w < n; ++w) outside.insert(w);
    outside -= g.closed_neighborhood(u);
    outside -= g.closed_neighborhood(v);
    VertexSet blocked(n);
    for (int w = 0; w < n; ++w)
        if (!outside.contains(w)) blocked.insert(w);
    std::vector<VertexSet> components;
    VertexSet seen(n);
    outside.for_each([&](int w) {
        if (seen.contains(w)) return;
        VertexSet comp = reachable_from(g, w, blocked);
        seen |= comp;
        components.push_back(comp);
    });
    g.neighbors(u).for_each([&](int a) {
        if (g.closed_neighborhood(v).contains(a)) return;
        g.neighbors(v).for_each([&](int b) {
            if (g.closed_neighborhood(u).contains(b)) return;
            if (g.has_edge(a, b)) {
                members.insert(a);
                members.insert(b);
            }
            for (const VertexSet& comp : components) {
                if (!comp.intersects(g.neighbors(a))) continue;
                if (!comp.intersects(g.neighbors(b))) continue;
                members.insert(a);
                members.insert(b);
                members |= comp;
            }
        });
    });
    return members;
}

TransitFunction toll_transit(const Graph& g) {
    require_connected(g);
    int n = g.vertex_count();
    std::map<std::pair<int, int>, std::vector<int>> entries;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            entries[{a, b}] = toll_interval(g, a, b).to_vector();
    return make_transit_function(n, entries, /*default_pairs=*/false);
}

}  // namespace tollwalk
