#ifndef TOLLWALK_EFGAME_HPP
#define TOLLWALK_EFGAME_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tollwalk/gadgets.hpp"
#include "tollwalk/ternary.hpp"

namespace tollwalk {

enum class EFWinner { spoiler, duplicator };

struct EFMove {
    bool in_a;      // spoiler picked in structure A
    int spoiler;    // spoiler's element
    int duplicator; // reply in the other structure
};

struct EFGameResult {
    int rounds = 0;
    EFWinner winner = EFWinner::spoiler;
    // Principal line establishing the value: for a duplicator win, each
    // spoiler move shown is the first one and the reply is a winning reply;
    // for a spoiler win, each spoiler move is a winning one.
    std::vector<EFMove> trace;
};

// State budget for the exact solver; overridable via the TOLLWALK_BUDGET
// environment variable (default 1e8).
double ef_state_budget();

// Exact minimax value of the r-move game: in each round the spoiler picks an
// element of either universe and the duplicator answers in the other; the
// duplicator wins a run iff the chosen pairs form a partial isomorphism.
// Memoized on (domain tuple, range tuple).  Throws budget_error when the
// estimated or visited state count exceeds the budget; strategy mode is the
// fallback at those sizes.
EFGameResult ef_solve(const TernaryStructure& a, const TernaryStructure& b, int rounds);

// ---- distance-based duplicator strategy on the gadget pair ---------------

// A scripted spoiler: per round, (side, vertex); side true = G_d.
using SpoilerScript = std::vector<std::pair<bool, int>>;

struct StrategyRound {
    bool in_a = false;
    int spoiler = -1;
    int duplicator = -1;
    bool conditions_ok = false;   // distance conditions (1)-(2) after the round
    bool partial_iso_ok = false;  // played pairs are a partial isomorphism
};

struct StrategyRunReport {
    bool duplicator_won = false;
    std::vector<StrategyRound> rounds;
    std::string detail;  // first failure, empty on a win
};

// Plays the duplicator on G_d versus G'_d for an n-move game: replies stay
// in the spoiler's layer (U <-> U', V <-> V', x <-> x'), the correspondence
// u_1 -> u'_1, v_1 -> v'_1, x -> x', u_{2d+1} -> u'_{2d+1},
// v_{2d+1} -> v'_{2d+1} is kept as a hard constraint, and among qualifying
// replies the least vertex id is chosen.  A reply b for spoiler move a
// qualifies when for every constraint or played pair (p, q), with
// t = 2^(n-i) after round i:  dist(a,p) <= t implies dist(b,q) = dist(a,p),
// and dist(a,p) > t implies dist(b,q) > t.  After each round the report
// asserts the distance conditions over played pairs and that the played
// pairs form a partial isomorphism of the two W-structures.
// Requires d > 2^(n+1).
class StrategyContext {
public:
    StrategyContext(int d, int n);

    StrategyRunReport play(const SpoilerScript& script) const;
    SpoilerScript random_script(std::mt19937& rng) const;

    const Graph& left() const { return a_; }
    const Graph& right() const { return b_; }

private:
    int d_, n_;
    Graph a_, b_;
    std::vector<std::vector<int>> da_, db_;
    TernaryStructure wa_, wb_;
    std::vector<std::pair<int, int>> anchors_;
};

// One-shot convenience wrapper around StrategyContext.
StrategyRunReport duplicator_strategy_play(int d, int n, const SpoilerScript& script);

}  // namespace tollwalk

#endif
