#ifndef TOLLWALK_ENUMERATE_HPP
#define TOLLWALK_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tollwalk/graph.hpp"

namespace tollwalk {

// All connected graphs on exactly n vertices up to isomorphism, in a
// deterministic order (ascending canonical edge-mask).  Builtin generation
// supports n <= 7; canonical form is the permutation-minimal edge bitmask.
std::vector<Graph> enumerate_connected(int n);

// Connected graphs with 1 <= n <= max_n vertices, concatenated by order.
std::vector<Graph> enumerate_connected_up_to(int max_n);

// Reads one graph6 line per graph; skips disconnected entries when
// connected_only is set.  Throws parse_error on malformed lines.
std::vector<Graph> read_graph6_file(const std::string& path, bool connected_only);

// A uniform G(n,p) sample conditioned on connectivity (rejection sampling).
Graph random_connected_graph(int n, double p, std::mt19937& rng);

}  // namespace tollwalk

#endif
