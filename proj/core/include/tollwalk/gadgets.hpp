#ifndef TOLLWALK_GADGETS_HPP
#define TOLLWALK_GADGETS_HPP

#include "tollwalk/graph.hpp"

namespace tollwalk {

// Two-layer ladder gadgets on 8d+1 vertices used by the non-definability
// machinery.  Vertex numbering (1-based names, 0-based ids):
//   u_i -> i-1,  v_i -> 4d+i-1  (i in 1..4d),  x -> 8d.
// G_d: each layer is a single 4d-cycle; rungs u_i v_i; plus x adjacent to
// v_1 and v_{2d+1}.  G'_d differs only in the layers: each is two disjoint
// 2d-cycles (indices 1..2d and 2d+1..4d).  Same vertex count and edge count
// (12d+2), different cycle structure; the graphs are not isomorphic.
int gadget_u(int d, int i);
int gadget_v(int d, int i);
int gadget_x(int d);

// Labels u1..u4d, v1..v4d, x.  Requires d >= 2.
Graph build_G_d(int d);

// Labels u'1..u'4d, v'1..v'4d, x'.  Requires d >= 2.
Graph build_G_d_prime(int d);

}  // namespace tollwalk

#endif
