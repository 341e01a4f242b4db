#ifndef TOLLWALK_GRAPH_HPP
#define TOLLWALK_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tollwalk/bits.hpp"

namespace tollwalk {

// A distance value meaning "no path".
inline constexpr int kInfiniteDistance = 1 << 29;

// Finite simple undirected graph on vertices 0..n-1, stored as bitset
// adjacency rows.  Vertices may optionally carry string labels (used by the
// named constructions, where e.g. "v2" is easier to audit than an index).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // Throws contract_error on self-loops, out-of-range ids, or duplicates.
    void add_edge(int a, int b);

    bool has_edge(int a, int b) const {
        return a >= 0 && a < n_ && adj_[a].contains(b);
    }

    const VertexSet& neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    int degree(int v) const;

    // Edges as (a, b) pairs with a < b, ascending lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    // Ascending degree multiset.
    std::vector<int> degree_sequence() const;

    void set_label(int v, std::string label);
    const std::string& label(int v) const;
    bool has_labels() const { return !labels_.empty(); }
    // Index of the vertex carrying `label`, if any.
    std::optional<int> vertex_by_label(const std::string& label) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;  // empty or size n_
};

// Vertices reachable from `start` in G - forbidden.  `start` must not be
// forbidden.
VertexSet reachable_from(const Graph& g, int start, const VertexSet& forbidden);

bool is_connected(const Graph& g);

// True when every a,b-path meets s.  Requires a != b and a, b not in s;
// adjacent a, b are never separated.
bool separates(const Graph& g, const VertexSet& s, int a, int b);

// All-pairs BFS distances; unreachable pairs get kInfiniteDistance.
std::vector<std::vector<int>> distances(const Graph& g);

// Single-source BFS distances.
std::vector<int> bfs_distances(const Graph& g, int source);

// Finds an induced copy of `pattern` in `host`.  Returns the image of
// pattern vertices 0..p-1, lexicographically least as a tuple, or nullopt.
// The witness is re-verified before being returned.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);

// ---- serialization ----------------------------------------------------

// Plain edge-list text: header "n m", then one "i j" line per edge with
// 0 <= i < j < n.  '#' starts a comment line; blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 (short form, n <= 62).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

}  // namespace tollwalk

#endif
