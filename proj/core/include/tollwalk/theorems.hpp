#ifndef TOLLWALK_THEOREMS_HPP
#define TOLLWALK_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tollwalk/axioms.hpp"
#include "tollwalk/graph.hpp"

namespace tollwalk {

// Machine-checkable statements: iff-characterizations (axiom set on the toll
// walk transit function <=> graph class), one-directional propositions
// (class or axiom hypothesis => axiom conclusions), and the five full
// characterization axiom lists used by converse probing.
enum class TheoremKind { iff, implication, characterization };

struct TheoremBinding {
    std::string id;
    TheoremKind kind;
    // iff / characterization: the axiom set (left side).
    // implication: the conclusion axioms.
    std::vector<AxiomId> axioms;
    // Class predicate name: chordal, triangle-free, tree, AT-free,
    // distance-hereditary, Ptolemaic; for implication ids whose hypothesis
    // is an axiom (prop-jc-implies-b2) this is empty and hyp_axioms is used.
    std::string graph_class;
    std::vector<AxiomId> hyp_axioms;
};

const std::vector<TheoremBinding>& theorem_bindings();
std::optional<TheoremBinding> theorem_by_id(const std::string& id);

struct TheoremCheck {
    bool left;   // axiom side (iff) or hypothesis (implication)
    bool right;  // class side (iff) or conclusion (implication; true if vacuous)
    bool agree;
    std::string witness;  // human-readable first divergence, empty if agree
};

// Evaluates one theorem on one connected graph.
TheoremCheck verify_theorem(const std::string& id, const Graph& g);

struct SweepDisagreement {
    std::string graph6;
    bool left, right;
    std::string witness;
};

struct EquivalenceReport {
    std::string id;
    int graphs_checked = 0;
    // For implication ids: how many graphs satisfied the hypothesis.
    int hypothesis_count = 0;
    std::vector<SweepDisagreement> disagreements;
};

// verify_theorem over every connected graph with n <= max_n (builtin
// enumeration, or a graph6 corpus when given).  jobs > 1 splits the corpus
// across threads; the report order is canonical regardless.
EquivalenceReport sweep(const std::string& id, int max_n, int jobs = 1,
                        const std::string& corpus_path = "");

struct ConverseReport {
    std::string id;
    int trials = 0;
    int satisfying = 0;              // random R meeting the axiom set
    int disconnected_underlying = 0; // satisfying R whose G_R is disconnected
    std::vector<std::string> falsifications;  // verbatim transit texts
};

// Random transit functions (seeded); every one satisfying the
// characterization's axiom set must have its underlying graph in the class
// and equal the toll walk transit function of that graph.  Functions with a
// disconnected underlying graph are recorded, not judged.
ConverseReport probe_converse(const std::string& char_id, int trials, int max_n,
                              std::uint32_t seed);

// Induced-path lemma family.  Hypotheses: easy1 = {J2, JC, TW2},
// easy = {J2, J4, J4p, TW1p}, easydh = {J2, J4, dh1, TW1p}.
struct PathLemmaReport {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;  // meaningful only when hypothesis holds
    std::string detail;
};
PathLemmaReport induced_path_lemma_check(const Graph& g, const std::string& variant);

}  // namespace tollwalk

#endif
