#ifndef TOLLWALK_TERNARY_HPP
#define TOLLWALK_TERNARY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tollwalk/bits.hpp"
#include "tollwalk/graph.hpp"
#include "tollwalk/transit.hpp"

namespace tollwalk {

// A ternary relation D over a universe {0,...,n-1}, stored row-wise: for
// each ordered pair (x,z) the set F(x,z) = {y : D(x,y,z)}.  A companion
// graph may be attached (the graph the structure was derived from), used by
// the distance-based game strategies.
class TernaryStructure {
public:
    TernaryStructure() = default;
    explicit TernaryStructure(int n);

    int universe_size() const { return n_; }

    bool holds(int x, int y, int z) const { return f(x, z).contains(y); }
    void set(int x, int y, int z);
    void unset(int x, int y, int z);

    const VertexSet& f(int x, int z) const;

    const std::optional<Graph>& companion() const { return companion_; }
    void attach_companion(Graph g);

    // Graph with an edge uv (u != v) iff F(u,v) ∪ F(v,u) = {u,v}.
    Graph underlying() const;

    // Relation equality; the companion annotation is ignored.
    bool operator==(const TernaryStructure& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;  // rows_[x * n_ + z] = F(x, z)
    std::optional<Graph> companion_;
};

// The transit-function conditions on a ternary relation, for all u, x, v:
//   (i) D(u,u,v);  (ii) D(u,x,v) implies D(v,x,u);  (iii) D(u,x,u) implies x=u.
// Throws contract_error naming the first failed condition.
void assert_ternary_conditions(const TernaryStructure& s);

// D(x,y,z) iff y lies in the toll interval T(x,z) of g; companion attached.
// Requires a connected graph.
TernaryStructure w_structure(const Graph& g);

// Ternary structure from an arbitrary transit function: D(x,y,z) iff
// y ∈ R(x,z).
TernaryStructure ternary_from_transit(const TransitFunction& r);

// The scant relation over g: F(x,y) = {x,y} when x = y or xy is an edge,
// and the whole universe otherwise.  Its underlying graph is g itself.
TernaryStructure scant_structure(const Graph& g);

// Scant verdict: every F(x,y) is {x,y} or the whole universe.  The witness
// is the lexicographically first offending pair together with its F-set.
// Requires conditions (i)-(iii); throws contract_error otherwise.
struct ScantVerdict {
    bool scant = false;
    int x = -1, y = -1;
    std::vector<int> f;
};
ScantVerdict is_scant(const TernaryStructure& s);

// An ordered list of pairs (a_i, b_i) built up during a game; a_i lives in
// structure A and b_i in structure B.
struct PartialMap {
    std::vector<std::pair<int, int>> pairs;
};

// True iff the map is a partial isomorphism: well-defined, injective, and
// D_A(a_i,a_j,a_k) iff D_B(b_i,b_j,b_k) for every triple over the domain.
bool check_partial_isomorphism(const PartialMap& m, const TernaryStructure& a,
                               const TernaryStructure& b);

}  // namespace tollwalk

#endif
