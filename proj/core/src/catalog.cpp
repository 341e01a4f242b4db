#include "tollwalk/catalog.hpp"

#include <map>
#include <utility>

#include "tollwalk/errors.hpp"

namespace tollwalk {

namespace {

struct NamedEdges {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

Graph build(const NamedEdges& def) {
    Graph g(int(def.vertices.size()));
    std::map<std::string, int> idx;
    for (int i = 0; i < int(def.vertices.size()); ++i) {
        idx[def.vertices[i]] = i;
        g.set_label(i, def.vertices[i]);
    }
    for (auto& [a, b] : def.edges) g.add_edge(idx.at(a), idx.at(b));
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw contract_error("path:n requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw contract_error("cycle:n requires n >= 3");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw contract_error("complete:n requires n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Fan family: path p1..pn plus a universal vertex y2.  The parameter is the
// path length, so the classic 3-fan is family_f(2, 4).
// kind 2 -> one universal vertex y2;
// kind 3 -> two adjacent universal vertices y1, y2;
// kind 4 -> two nonadjacent universal vertices y1, y2.
Graph family_f(int kind, int n) {
    if (n < 1) throw contract_error("F family requires path length n >= 1");
    int extra = (kind == 2) ? 1 : 2;
    Graph g(n + extra);
    for (int i = 0; i < n; ++i) g.set_label(i, "p" + std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (kind == 2) {
        g.set_label(n, "y2");
        for (int i = 0; i < n; ++i) g.add_edge(i, n);
    } else {
        g.set_label(n, "y1");
        g.set_label(n + 1, "y2");
        for (int i = 0; i < n; ++i) {
            g.add_edge(i, n);
            g.add_edge(i, n + 1);
        }
        if (kind == 3) g.add_edge(n, n + 1);
    }
    return g;
}

// XF families: the F graph plus attachment vertices u, v, x.
Graph family_xf(int kind, int n) {
    Graph f = family_f(kind, n);
    int base = f.vertex_count();
    Graph g(base + 3);
    for (int i = 0; i < base; ++i) g.set_label(i, f.label(i));
    for (auto [a, b] : f.edges()) g.add_edge(a, b);
    int u = base, v = base + 1, x = base + 2;
    g.set_label(u, "u");
    g.set_label(v, "v");
    g.set_label(x, "x");
    int p1 = 0, pn = n - 1;
    int y1 = n, y2 = (kind == 2) ? n : n + 1;
    if (kind == 2) {
        g.add_edge(u, p1);
        g.add_edge(pn, v);
        g.add_edge(y2, x);
    } else {
        g.add_edge(u, p1);
        g.add_edge(u, y1);
        g.add_edge(v, pn);
        g.add_edge(v, y2);
        g.add_edge(x, y1);
        g.add_edge(x, y2);
    }
    return g;
}

// Fixed small patterns.  The X-series are transcribed from drawings; the
// transcription is cross-checked by the degree-sequence fixture under
// tests/data and by the asteroidal-triple checks in the test suite.
const std::map<std::string, NamedEdges>& fixed_patterns() {
    static const std::map<std::string, NamedEdges> table = {
        // Square x,y,c,d plus apex u adjacent to the top edge.  The apex is
        // the drawing's "u=v" vertex.
        {"house",
         {{"x", "y", "c", "d", "u"},
          {{"x", "y"}, {"y", "c"}, {"c", "d"}, {"d", "x"}, {"c", "u"}, {"d", "u"}}}},
        // Two squares sharing the edge cd.
        {"domino",
         {{"x", "y", "c", "d", "u", "v"},
          {{"x", "y"}, {"y", "c"}, {"c", "d"}, {"d", "x"},
           {"c", "v"}, {"v", "u"}, {"u", "d"}}}},
        // Path u-x-y-v plus the hub z adjacent to all of it.
        {"fan3",
         {{"u", "x", "y", "v", "z"},
          {{"u", "x"}, {"x", "y"}, {"y", "v"},
           {"z", "u"}, {"z", "x"}, {"z", "y"}, {"z", "v"}}}},
        // Four-cycle a,x,y,v plus the pendant edge ua.
        {"Pgraph",
         {{"a", "x", "y", "v", "u"},
          {{"a", "x"}, {"x", "y"}, {"y", "v"}, {"v", "a"}, {"u", "a"}}}},
        // Five-cycle a,x,y,b,v plus the pendant edge ua.
        {"pan5",
         {{"a", "x", "y", "b", "v", "u"},
          {{"a", "x"}, {"x", "y"}, {"y", "b"}, {"b", "v"}, {"v", "a"}, {"u", "a"}}}},
        // Spider with three legs of length two; leg ends are u, x, v.
        {"T2",
         {{"u", "b", "c", "d", "x", "f", "v"},
          {{"u", "b"}, {"b", "c"}, {"c", "d"}, {"d", "x"}, {"c", "f"}, {"f", "v"}}}},
        {"X2",
         {{"u", "a", "b", "c", "d", "v", "x"},
          {{"u", "a"}, {"a", "d"}, {"d", "c"}, {"c", "v"},
           {"a", "b"}, {"b", "c"}, {"b", "x"}}}},
        {"X3",
         {{"u", "b", "v", "d", "e", "f", "x"},
          {{"u", "b"}, {"b", "v"}, {"v", "d"}, {"d", "e"},
           {"e", "f"}, {"f", "u"}, {"b", "e"}, {"e", "x"}}}},
        {"X30",
         {{"x", "b", "c", "v", "f", "e", "u"},
          {{"x", "b"}, {"b", "c"}, {"c", "v"}, {"c", "f"},
           {"f", "e"}, {"e", "b"}, {"e", "u"}, {"u", "f"}}}},
        {"X31",
         {{"u", "b", "v", "d", "e", "f", "x"},
          {{"u", "b"}, {"b", "v"}, {"v", "d"}, {"d", "e"}, {"e", "f"},
           {"f", "u"}, {"d", "b"}, {"b", "f"}, {"b", "e"}, {"e", "x"}}}},
        {"X32",
         {{"u", "b", "v", "d", "e", "f", "x"},
          {{"u", "b"}, {"b", "v"}, {"v", "d"}, {"d", "e"}, {"e", "f"},
           {"f", "u"}, {"e", "b"}, {"x", "e"}, {"b", "f"}}}},
        {"X33",
         {{"u", "b", "v", "d", "e", "f", "x"},
          {{"u", "b"}, {"b", "v"}, {"v", "d"}, {"d", "e"}, {"e", "f"},
           {"f", "u"}, {"b", "e"}, {"e", "x"}, {"x", "f"}}}},
        {"X34",
         {{"a", "v", "c", "x", "e", "u", "g"},
          {{"a", "v"}, {"v", "c"}, {"c", "x"}, {"x", "e"}, {"e", "u"},
           {"u", "g"}, {"g", "a"}, {"a", "e"}, {"e", "g"}, {"g", "c"}, {"c", "e"}}}},
        {"X35",
         {{"u", "b", "v", "d", "e", "f", "x"},
          {{"u", "b"}, {"b", "v"}, {"v", "d"}, {"d", "e"}, {"e", "f"},
           {"f", "u"}, {"f", "b"}, {"b", "e"}, {"e", "x"}, {"x", "f"}}}},
        {"X36",
         {{"u", "b", "c", "v", "f", "x", "e"},
          {{"u", "b"}, {"b", "c"}, {"c", "v"}, {"v", "f"}, {"f", "x"},
           {"x", "e"}, {"e", "u"}, {"b", "f"}, {"f", "e"}, {"e", "c"}}}},
        {"X37",
         {{"a", "v", "d", "u", "f", "x"},
          {{"a", "v"}, {"v", "d"}, {"d", "u"}, {"u", "f"},
           {"f", "x"}, {"x", "a"}, {"d", "f"}}}},
        {"X38",
         {{"a", "u", "c", "v", "e", "x", "g"},
          {{"a", "u"}, {"u", "c"}, {"c", "v"}, {"v", "e"},
           {"e", "x"}, {"x", "g"}, {"g", "a"}, {"g", "c"}}}},
        {"X39",
         {{"u", "b", "c", "v", "f", "x", "e"},
          {{"u", "b"}, {"b", "c"}, {"c", "v"}, {"v", "f"}, {"f", "x"},
           {"x", "e"}, {"e", "u"}, {"b", "f"}, {"e", "c"}}}},
        {"X40",
         {{"u", "b", "c", "v", "f", "x", "e"},
          {{"u", "b"}, {"b", "c"}, {"c", "v"}, {"v", "f"}, {"f", "x"},
           {"x", "e"}, {"e", "u"}, {"b", "f"}, {"e", "c"}, {"c", "f"}}}},
        {"X41",
         {{"x", "b", "c", "v", "f", "u", "e"},
          {{"x", "b"}, {"b", "c"}, {"c", "v"}, {"c", "f"},
           {"f", "u"}, {"u", "e"}, {"e", "b"}}}},
    };
    return table;
}

int parse_param(const std::string& name, std::size_t colon) {
    try {
        std::size_t used = 0;
        int k = std::stoi(name.substr(colon + 1), &used);
        if (used != name.size() - colon - 1) throw std::invalid_argument("");
        return k;
    } catch (const std::exception&) {
        throw contract_error("catalog: bad parameter in \"" + name + "\"");
    }
}

}  // namespace

Graph catalog(const std::string& name) {
    auto& fixed = fixed_patterns();
    if (auto it = fixed.find(name); it != fixed.end()) return build(it->second);
    if (name == "C4") return cycle_graph(4);
    if (name == "C5") return cycle_graph(5);

    std::size_t colon = name.find(':');
    if (colon == std::string::npos)
        throw contract_error("catalog: unknown pattern \"" + name + "\"");
    std::string head = name.substr(0, colon);
    int k = parse_param(name, colon);
    if (head == "path") return path_graph(k);
    if (head == "cycle") return cycle_graph(k);
    if (head == "complete") return complete_graph(k);
    if (head == "Ck") {
        if (k < 4) throw contract_error("Ck:k requires k >= 4");
        return cycle_graph(k);
    }
    if (head == "hole") {
        if (k < 5) throw contract_error("hole:k requires k >= 5");
        return cycle_graph(k);
    }
    if (head == "F2") return family_f(2, k);
    if (head == "F3") return family_f(3, k);
    if (head == "F4") return family_f(4, k);
    if (head == "XF2") return family_xf(2, k);
    if (head == "XF3") return family_xf(3, k);
    if (head == "XF4") return family_xf(4, k);
    throw contract_error("catalog: unknown pattern \"" + name + "\"");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (auto& [name, _] : fixed_patterns()) names.push_back(name);
    for (std::string base : {"C4", "C5", "hole:5", "hole:6", "path:4", "cycle:6",
                             "complete:4", "F2:4", "F3:3", "F4:3", "XF2:2",
                             "XF3:2", "XF4:2"})
        names.push_back(base);
    return names;
}

}  // namespace tollwalk
