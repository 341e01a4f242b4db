#ifndef TOLLWALK_CATALOG_HPP
#define TOLLWALK_CATALOG_HPP

#include <string>
#include <vector>

#include "tollwalk/graph.hpp"

namespace tollwalk {

// Returns the named pattern graph with its documented fixed labelling.
// Supported names:
//   house, C4, C5, domino, fan3, Pgraph, pan5, T2, X2, X3, X30..X41
//   Ck:k (k>=4), hole:k (k>=5), path:n (n>=1), cycle:n (n>=3), complete:n (n>=1)
//   F2:n, F3:n, F4:n, XF2:n, XF3:n, XF4:n (n = path length, n>=1)
// Vertices carry string labels; where a pattern marks special vertices
// u, v, x those labels are preserved.
// Throws contract_error on unknown names or out-of-range parameters.
Graph catalog(const std::string& name);

// All non-parametric names plus a few representative parametric instances;
// used by the CLI and the transcription-checksum fixtures.
std::vector<std::string> catalog_names();

}  // namespace tollwalk

#endif
