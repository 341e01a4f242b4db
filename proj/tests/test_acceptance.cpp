// Release gate: one pass/fail line per criterion, all checks exact.
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "tollwalk/axioms.hpp"
#include "tollwalk/catalog.hpp"
#include "tollwalk/efgame.hpp"
#include "tollwalk/enumerate.hpp"
#include "tollwalk/fixtures.hpp"
#include "tollwalk/gadgets.hpp"
#include "tollwalk/recognizers.hpp"
#include "tollwalk/ternary.hpp"
#include "tollwalk/theorems.hpp"
#include "tollwalk/toll.hpp"

using namespace tollwalk;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& description) {
    std::printf("criterion %d: %s — %s\n", number, ok ? "PASS" : "FAIL",
                description.c_str());
    if (!ok) ++failures;
}

// 1. The separation-based interval computation and the walk-enumeration
// oracle agree on every non-adjacent pair: exhaustively over all connected
// graphs on at most 6 vertices, and on 200 seeded random connected graphs
// with up to 12 vertices.
bool criterion_dual_oracle() {
    for (const Graph& g : enumerate_connected_up_to(6)) {
        int n = g.vertex_count();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(a, b)) continue;
                if (toll_interval(g, a, b) != toll_interval_oracle(g, a, b))
                    return false;
            }
    }
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> pick_n(4, 12);
    std::uniform_real_distribution<double> pick_p(0.2, 0.6);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(pick_n(rng), pick_p(rng), rng);
        int n = g.vertex_count();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(a, b)) continue;
                if (toll_interval(g, a, b) != toll_interval_oracle(g, a, b))
                    return false;
            }
    }
    return true;
}

// 2. The six equivalence statements hold with zero disagreements over all
// connected graphs on at most 6 vertices.
bool criterion_iff_sweeps() {
    for (const char* id :
         {"thm-jc-chordal", "lem-tr-trianglefree", "thm-jc-tr-tree",
          "cor-b1p-atfree", "thm-pt-ptolemaic", "thm-dh-dh1-dh"}) {
        EquivalenceReport rep = sweep(id, 6, 4);
        if (!rep.disagreements.empty()) return false;
        if (rep.graphs_checked != 1 + 1 + 2 + 6 + 21 + 112) return false;
    }
    return true;
}

// 3. Every toll walk transit function over the same corpus satisfies the
// transit-function conditions and the universally valid axioms
// J2, J4, TW1, TW2, TW1'.
bool criterion_universal_axioms() {
    const std::vector<AxiomId> universal = {AxiomId::J2, AxiomId::J4,
                                            AxiomId::TW1, AxiomId::TW2,
                                            AxiomId::TW1p};
    for (const Graph& g : enumerate_connected_up_to(6)) {
        TransitFunction t = toll_transit(g);  // construction enforces t1-t3
        try {
            assert_ternary_conditions(ternary_from_transit(t));
        } catch (const std::exception&) {
            return false;
        }
        if (!satisfies_all(t, universal)) return false;
    }
    return true;
}

// 4. The five one-directional propositions have no counterexample on the
// corpus: chordal => TWC; JC => b2; AT-free => J4' and b2'; AT-free => TWA;
// distance-hereditary => b2 and TWC.
bool criterion_implications() {
    for (const char* id :
         {"prop-chordal-twc", "prop-jc-implies-b2", "prop-atfree-j4p-b2p",
          "prop-atfree-twa", "prop-dh-b2-twc"}) {
        EquivalenceReport rep = sweep(id, 6, 4);
        if (!rep.disagreements.empty()) return false;
        if (rep.hypothesis_count == 0) return false;  // must not be vacuous
    }
    return true;
}

// 5. All nine worked-example transit functions reproduce their expected
// satisfied and violated axiom sets exactly.
bool criterion_fixtures() {
    for (int k = 1; k <= 9; ++k) {
        Fixture f = fixture(k);
        for (AxiomId id : f.expected_satisfied)
            if (!check_axiom(f.r, id).satisfied) return false;
        for (AxiomId id : f.expected_violated)
            if (check_axiom(f.r, id).satisfied) return false;
    }
    return true;
}

// 6. Named counterexamples: C4 violates JC with four consecutive cycle
// vertices as the witness; C6 violates TWC; the 3-fan has the trivial
// intervals T(x,z) = {x,z} and T(y,z) = {y,z} and violates pt and dh; the
// house violates dh1.
bool criterion_named_counterexamples() {
    AxiomVerdict jc = check_axiom(toll_transit(catalog("C4")), AxiomId::JC);
    if (jc.satisfied) return false;
    if (jc.witness != std::vector<int>{0, 1, 2, 3}) return false;

    if (check_axiom(toll_transit(catalog("cycle:6")), AxiomId::TWC).satisfied)
        return false;

    Graph fan = catalog("fan3");
    int x = *fan.vertex_by_label("x"), y = *fan.vertex_by_label("y");
    int z = *fan.vertex_by_label("z");
    TransitFunction t = toll_transit(fan);
    if (t.at(x, z) != VertexSet::of(5, {x, z})) return false;
    if (t.at(y, z) != VertexSet::of(5, {y, z})) return false;
    if (check_axiom(t, AxiomId::pt).satisfied) return false;
    if (check_axiom(t, AxiomId::dh).satisfied) return false;

    return !check_axiom(toll_transit(catalog("house")), AxiomId::dh1).satisfied;
}

// 7. Scantness split at d = 2 and d = 3: W(G_d) is scant, W(G'_d) is not,
// and the exhibited pair (v'_2, x') has F-set {v'_1, v'_2, x'}.
bool criterion_scant() {
    for (int d : {2, 3}) {
        if (!is_scant(w_structure(build_G_d(d))).scant) return false;
        TernaryStructure wp = w_structure(build_G_d_prime(d));
        if (is_scant(wp).scant) return false;
        VertexSet expect = VertexSet::of(
            8 * d + 1, {gadget_v(d, 1), gadget_v(d, 2), gadget_x(d)});
        if (wp.f(gadget_v(d, 2), gadget_x(d)) != expect) return false;
    }
    return true;
}

// 8. Game results: the exact solver gives the Duplicator the 1-move games on
// W(G_5) vs W(G'_5) and on W(C8) vs W(C9); the distance-based strategy wins
// 500 of 500 seeded 2-move runs at d = 9 with the distance conditions and
// partial-isomorphism check asserted after every round; and the exact solver
// gives the Spoiler the 3-move game on W(path:3) vs W(K2).
bool criterion_games() {
    if (ef_solve(w_structure(build_G_d(5)), w_structure(build_G_d_prime(5)), 1)
            .winner != EFWinner::duplicator)
        return false;
    if (ef_solve(w_structure(catalog("cycle:8")), w_structure(catalog("cycle:9")),
                 1).winner != EFWinner::duplicator)
        return false;

    StrategyContext ctx(9, 2);
    std::mt19937 rng(20260824);
    for (int run = 0; run < 500; ++run) {
        StrategyRunReport rep = ctx.play(ctx.random_script(rng));
        if (!rep.duplicator_won) return false;
        for (const StrategyRound& r : rep.rounds)
            if (!r.conditions_ok || !r.partial_iso_ok) return false;
    }

    return ef_solve(w_structure(catalog("path:3")),
                    w_structure(catalog("complete:2")), 3)
               .winner == EFWinner::spoiler;
}

// 9. Recognizer cross-checks over the corpus: the chordal, the
// distance-hereditary and the Ptolemaic recognizers each run two or three
// independent methods internally and throw on any internal mismatch, and
// Ptolemaic membership equals chordal together with distance-hereditary.
bool criterion_recognizers() {
    try {
        for (const Graph& g : enumerate_connected_up_to(6)) {
            bool chordal = is_chordal(g).member;
            bool dh = is_distance_hereditary(g).member;
            if (is_ptolemaic(g).member != (chordal && dh)) return false;
            if (!at_free_forbidden_crosscheck(g, 7).agree) return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// 10. Converse probing: 10,000 seeded random transit functions on universes
// of up to 4 elements per characterization id, zero falsifications.
bool criterion_converse() {
    for (const char* id : {"char-chordal", "char-tree", "char-atfree",
                           "char-ptolemaic", "char-dh"}) {
        ConverseReport rep = probe_converse(id, 10000, 4, 31415);
        if (!rep.falsifications.empty()) return false;
        if (rep.satisfying == 0) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, criterion_dual_oracle(),
           "interval computation matches the walk oracle (exhaustive n <= 6, "
           "200 random graphs n <= 12)");
    report(2, criterion_iff_sweeps(),
           "six equivalence sweeps over all connected graphs n <= 6, zero "
           "disagreements");
    report(3, criterion_universal_axioms(),
           "transit conditions and J2, J4, TW1, TW2, TW1' hold on every "
           "corpus graph");
    report(4, criterion_implications(),
           "five implication sweeps over the corpus, zero counterexamples");
    report(5, criterion_fixtures(),
           "all nine worked-example fixtures reproduce their axiom verdicts");
    report(6, criterion_named_counterexamples(),
           "named counterexamples: C4/JC witness, C6/TWC, 3-fan trivial "
           "intervals with pt and dh, house/dh1");
    report(7, criterion_scant(),
           "scantness split at d in {2,3} with the exhibited witness pair "
           "(v'_2, x')");
    report(8, criterion_games(),
           "game values: duplicator wins the 1-move games and 500/500 "
           "strategy runs; spoiler wins path:3 vs K2 at 3 moves");
    report(9, criterion_recognizers(),
           "recognizer cross-checks agree over the corpus");
    report(10, criterion_converse(),
           "converse probing, 10000 seeded trials per characterization, "
           "zero falsifications");
    return failures == 0 ? 0 : 1;
}
