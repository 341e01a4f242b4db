#ifndef TOLLWALK_TOLL_HPP
#define TOLLWALK_TOLL_HPP

#include "tollwalk/graph.hpp"
#include "tollwalk/transit.hpp"

namespace tollwalk {

// Toll interval T(u,v): all vertices lying on some toll u,v-walk.  A toll
// u,v-walk visits u and v only at its ends, enters u's neighborhood exactly
// once (at the second vertex) and v's exactly once (at the second-to-last).
//
// Separation route: for distinct non-adjacent u,v a vertex w belongs to
// T(u,v) iff N[u]-{w} does not separate w from v and N[v]-{w} does not
// separate w from u.  Equal and adjacent pairs are definitional:
// T(u,u) = {u}, and T(u,v) = {u,v} for an edge uv.
// Requires a connected graph.
VertexSet toll_interval(const Graph& g, int u, int v);

// Walk-definition route, used only to cross-validate toll_interval.  A toll
// u,v-walk is u, a, (vertices outside N[u] ∪ N[v]), b, v where a ∈ N(u),
// b ∈ N(v), a ∉ N[v] and b ∉ N[u] unless a = b.  So w lies on such a walk
// iff for some gate pair (a,b) both w and b are reachable from a inside
// {a,b} ∪ (V ∖ (N[u] ∪ N[v])).  Deliberately does not reuse the separation
// test above.  Requires distinct non-adjacent u, v in a connected graph.
VertexSet toll_interval_oracle(const Graph& g, int u, int v);

// The full toll walk transit function of a connected graph.
TransitFunction toll_transit(const Graph& g);

}  // namespace tollwalk

#endif
