#ifndef TOLLWALK_AXIOMS_HPP
#define TOLLWALK_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tollwalk/transit.hpp"

namespace tollwalk {

// Betweenness axioms on a transit function.  Primed names use an ASCII "p"
// suffix (b1p = (b1') etc.).
enum class AxiomId {
    b1, b1p, b2, b2p,
    J0, J2, J3, J4, J4p, JC,
    tr,
    TW1, TW1p, TW2, TW3, TWC, TWA,
    dh, dh1, pt,
    SP,
};

const std::vector<AxiomId>& all_axioms();
std::string axiom_name(AxiomId id);
std::optional<AxiomId> axiom_by_name(const std::string& name);

struct AxiomVerdict {
    AxiomId axiom;
    bool satisfied;
    // For a violated universally quantified axiom: the values of the
    // universally quantified variables, in the axiom's own variable order
    // (for the exists-style axioms TW3/TWC/TWA/pt/dh this is the tuple for
    // which the required inner witness is missing / the violating tuple).
    std::vector<int> witness;
    // Parallel names for the witness entries, e.g. {"u","v","x"}.
    std::vector<std::string> witness_names;
};

// Exhaustive evaluation over the universe.  Quantifier distinctness follows
// each axiom's wording; each checker documents its distinctness set next to
// its loop nest.  Iteration is lexicographic in the axiom's variable order,
// so the first witness is deterministic.
AxiomVerdict check_axiom(const TransitFunction& r, AxiomId id);

std::vector<AxiomVerdict> check_axioms(const TransitFunction& r,
                                       const std::vector<AxiomId>& ids);

// True iff every axiom in `ids` is satisfied.
bool satisfies_all(const TransitFunction& r, const std::vector<AxiomId>& ids);

}  // namespace tollwalk

#endif
