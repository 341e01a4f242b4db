#ifndef TOLLWALK_TRANSIT_HPP
#define TOLLWALK_TRANSIT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tollwalk/bits.hpp"
#include "tollwalk/graph.hpp"

namespace tollwalk {

// A transit function R on {0,...,n-1}: a set R(a,b) per unordered pair with
//   (t1) a, b in R(a,b);  (t2) R(a,b) = R(b,a);  (t3) R(a,a) = {a}.
// Symmetry is structural (storage is keyed by unordered pair); (t1) and (t3)
// are enforced at construction.
class TransitFunction {
public:
    TransitFunction() = default;

    int universe_size() const { return n_; }

    const VertexSet& at(int a, int b) const {
        return table_[index(a, b)];
    }

    // True when R(a,b) = {a,b} (for a = b this reads R(a,a) = {a}).
    bool is_trivial_pair(int a, int b) const {
        return at(a, b).count() == (a == b ? 1 : 2);
    }

    bool operator==(const TransitFunction&) const = default;

    friend TransitFunction make_transit_function(
        int n, const std::map<std::pair<int, int>, std::vector<int>>& entries,
        bool default_pairs);

private:
    int index(int a, int b) const;

    int n_ = 0;
    std::vector<VertexSet> table_;  // one entry per unordered pair incl. a=b
};

// Builds and validates a transit function.  Keys may come in either order;
// a listed set must contain both endpoints (t1) and R(a,a) must be {a} (t3),
// else contract_error names the pair.  With default_pairs set, missing
// entries become R(a,b) = {a,b}; otherwise every a<b pair must be listed.
TransitFunction make_transit_function(
    int n, const std::map<std::pair<int, int>, std::vector<int>>& entries,
    bool default_pairs = true);

// Edge ab iff a != b and R(a,b) = {a,b}.
Graph underlying_graph(const TransitFunction& r);

// Text format: line 1 = "n"; then lines "a b : c1 c2 ... ck"; unlisted pairs
// default to {a,b}; '#' starts a comment line.
TransitFunction parse_transit_function(std::istream& in);
TransitFunction parse_transit_function(const std::string& text);
std::string to_transit_text(const TransitFunction& r);

}  // namespace tollwalk

#endif
