#ifndef TOLLWALK_RECOGNIZERS_HPP
#define TOLLWALK_RECOGNIZERS_HPP

#include <string>
#include <vector>

#include "tollwalk/graph.hpp"

namespace tollwalk {

struct ClassReport {
    std::string class_name;
    bool member = false;
    // Present when member is false; what the certificate vertices mean,
    // e.g. "induced-cycle", "asteroidal-triple", "non-geodesic-induced-path",
    // "ptolemy-quadruple", "triangle", "cycle", "disconnected".
    std::string certificate_kind;
    std::vector<int> certificate;
};

// No induced cycle of length >= 4.  Runs both a maximum-cardinality-search
// elimination-order test and an explicit induced-cycle search; disagreement
// (a bug) throws contract_error.
ClassReport is_chordal(const Graph& g);

// No asteroidal triple: no u,v,w such that every pair is connected when the
// third vertex's closed neighborhood is deleted.
ClassReport is_at_free(const Graph& g);

// Every induced path is a shortest path.  Also checks the forbidden-subgraph
// form (house, hole C_k k>=5, domino, 3-fan) and requires agreement.
// Requires a connected graph.
ClassReport is_distance_hereditary(const Graph& g);

// Ptolemy inequality d(u,v)d(w,x) + d(u,x)d(v,w) >= d(u,w)d(v,x) for all
// quadruples.  Also evaluated as chordal+distance-hereditary and as
// chordal+3-fan-free; the three must agree.  Requires a connected graph.
ClassReport is_ptolemaic(const Graph& g);

ClassReport is_tree(const Graph& g);
ClassReport is_triangle_free(const Graph& g);

// Compares is_at_free against exclusion of the forbidden-pattern family
// (cycles of length >= 6, the X-series, and the XF families) restricted to
// patterns on at most max_pattern vertices.
struct AtFreeCrosscheck {
    bool at_free;
    bool forbidden_found;
    std::string pattern;     // name of the found forbidden pattern, if any
    std::vector<int> image;  // its induced image in g
    bool agree;              // consistent given the max_pattern cutoff
};
AtFreeCrosscheck at_free_forbidden_crosscheck(const Graph& g, int max_pattern);

}  // namespace tollwalk

#endif
