#include "tollwalk/recognizers.hpp"

#include <algorithm>
#include <optional>

#include "tollwalk/catalog.hpp"
#include "tollwalk/errors.hpp"

namespace tollwalk {

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
bool chordal_by_elimination(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0), pos(n, -1), order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        pos[best] = step;
        order.push_back(best);
        g.neighbors(best).for_each([&](int w) {
            if (pos[w] < 0) ++weight[w];
        });
    }
    // Check: earlier-visited neighbors of v, minus the latest of them, must
    // all be adjacent to that latest one.
    for (int v : order) {
        int latest = -1;
        std::vector<int> earlier;
        g.neighbors(v).for_each([&](int w) {
            if (pos[w] < pos[v]) {
                earlier.push_back(w);
                if (latest < 0 || pos[w] > pos[latest]) latest = w;
            }
        });
        for (int w : earlier)
            if (w != latest && !g.has_edge(w, latest)) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_len) {
    for (int k = min_len; k <= g.vertex_count(); ++k)
        if (auto img = contains_induced(g, catalog("cycle:" + std::to_string(k))))
            return img;
    return std::nullopt;
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw contract_error("requires connected graph");
}

// True when a and b are connected in g minus the closed neighborhood of w
// (false when either endpoint lies inside it).
bool leg(const Graph& g, int a, int b, int w) {
    VertexSet blocked = g.closed_neighborhood(w);
    if (blocked.contains(a) || blocked.contains(b)) return false;
    return reachable_from(g, a, blocked).contains(b);
}

// Depth-first search over induced u,...-paths; reports a path to `target`
// longer than dist[target], if one exists.  `path` holds the current induced
// path; candidates must be adjacent to the last vertex and non-adjacent to
// all earlier ones.
bool find_long_induced_path(const Graph& g, const std::vector<int>& dist,
                            int target, std::vector<int>& path) {
    int last = path.back();
    if (last == target)
        return int(path.size()) - 1 > dist[target];
    VertexSet candidates = g.neighbors(last);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        candidates -= g.neighbors(path[i]);
        candidates.erase(path[i]);
    }
    bool found = false;
    candidates.for_each([&](int w) {
        if (found) return;
        path.push_back(w);
        if (find_long_induced_path(g, dist, target, path))
            found = true;
        else
            path.pop_back();
    });
    return found;
}

std::optional<std::vector<int>> non_geodesic_induced_path(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            std::vector<int> path{u};
            if (find_long_induced_path(g, dist, v, path)) return path;
        }
    }
    return std::nullopt;
}

struct ForbiddenHit {
    std::string pattern;
    std::vector<int> image;
};

std::optional<ForbiddenHit> find_dh_forbidden(const Graph& g) {
    for (const char* name : {"house", "domino", "fan3"})
        if (auto img = contains_induced(g, catalog(name)))
            return ForbiddenHit{name, *img};
    for (int k = 5; k <= g.vertex_count(); ++k)
        if (auto img = contains_induced(g, catalog("cycle:" + std::to_string(k))))
            return ForbiddenHit{"hole:" + std::to_string(k), *img};
    return std::nullopt;
}

}  // namespace

ClassReport is_chordal(const Graph& g) {
    bool fast = chordal_by_elimination(g);
    auto cycle = find_induced_cycle(g, 4);
    if (fast == cycle.has_value())
        throw contract_error("is_chordal: elimination and cycle search disagree");
    ClassReport report{"chordal", fast, "", {}};
    if (cycle) {
        report.certificate_kind = "induced-cycle";
        report.certificate = *cycle;
    }
    return report;
}

ClassReport is_at_free(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (leg(g, u, v, w) && leg(g, u, w, v) && leg(g, v, w, u))
                    return {"AT-free", false, "asteroidal-triple", {u, v, w}};
    return {"AT-free", true, "", {}};
}

ClassReport is_distance_hereditary(const Graph& g) {
    require_connected(g);
    auto bad_path = non_geodesic_induced_path(g);
    auto forbidden = find_dh_forbidden(g);
    if (bad_path.has_value() != forbidden.has_value())
        throw contract_error(
            "is_distance_hereditary: definitional and forbidden tests disagree");
    if (bad_path)
        return {"distance-hereditary", false, "non-geodesic-induced-path", *bad_path};
    return {"distance-hereditary", true, "", {}};
}

ClassReport is_ptolemaic(const Graph& g) {
    require_connected(g);
    auto d = distances(g);
    int n = g.vertex_count();
    std::optional<std::vector<int>> quad;
    for (int u = 0; u < n && !quad; ++u)
        for (int v = 0; v < n && !quad; ++v)
            for (int w = 0; w < n && !quad; ++w)
                for (int x = 0; x < n; ++x) {
                    long lhs = long(d[u][v]) * d[w][x] + long(d[u][x]) * d[v][w];
                    if (lhs < long(d[u][w]) * d[v][x]) {
                        quad = {u, v, w, x};
                        break;
                    }
                }
    bool by_inequality = !quad.has_value();
    ClassReport chordal = is_chordal(g);
    bool by_structure = chordal.member && is_distance_hereditary(g).member;
    bool by_fan = chordal.member && !contains_induced(g, catalog("fan3"));
    if (by_inequality != by_structure || by_inequality != by_fan)
        throw contract_error("is_ptolemaic: the three tests disagree");
    ClassReport report{"Ptolemaic", by_inequality, "", {}};
    if (quad) {
        report.certificate_kind = "ptolemy-quadruple";
        report.certificate = *quad;
    }
    return report;
}

ClassReport is_tree(const Graph& g) {
    if (!is_connected(g)) {
        // Lexicographically first vertex not reachable from 0.
        VertexSet seen = reachable_from(g, 0, VertexSet(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!seen.contains(v)) return {"tree", false, "disconnected", {0, v}};
    }
    if (g.edge_count() != g.vertex_count() - 1) {
        // Connected with too many edges: some induced cycle exists.
        auto cycle = find_induced_cycle(g, 3);
        return {"tree", false, "cycle", cycle.value_or(std::vector<int>{})};
    }
    return {"tree", true, "", {}};
}

ClassReport is_triangle_free(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w))
                    return {"triangle-free", false, "triangle", {u, v, w}};
        }
    return {"triangle-free", true, "", {}};
}

AtFreeCrosscheck at_free_forbidden_crosscheck(const Graph& g, int max_pattern) {
    if (max_pattern < 7)
        throw contract_error("at_free_forbidden_crosscheck: max_pattern >= 7 required");
    AtFreeCrosscheck result;
    result.at_free = is_at_free(g).member;
    result.forbidden_found = false;

    std::vector<std::string> patterns;
    for (int k = 6; k <= max_pattern; ++k)
        patterns.push_back("cycle:" + std::to_string(k));
    for (const char* base : {"T2", "X2", "X3"}) patterns.push_back(base);
    for (int i = 30; i <= 41; ++i) patterns.push_back("X" + std::to_string(i));
    // XF2:1 is a tree (hence itself AT-free); the family starts at 2.
    for (int n = 2; n + 4 <= max_pattern; ++n)
        patterns.push_back("XF2:" + std::to_string(n));
    for (int n = 1; n + 5 <= max_pattern; ++n) {
        patterns.push_back("XF3:" + std::to_string(n));
        patterns.push_back("XF4:" + std::to_string(n));
    }

    for (auto& name : patterns) {
        Graph p = catalog(name);
        if (p.vertex_count() > max_pattern || p.vertex_count() > g.vertex_count())
            continue;
        if (auto img = contains_induced(g, p)) {
            result.forbidden_found = true;
            result.pattern = name;
            result.image = *img;
            break;
        }
    }
    // A found pattern must always certify non-AT-freeness; the converse only
    // binds when the cutoff covers all of g.
    result.agree = result.forbidden_found
                       ? !result.at_free
                       : (result.at_free || max_pattern < g.vertex_count());
    return result;
}

}  // namespace tollwalk
