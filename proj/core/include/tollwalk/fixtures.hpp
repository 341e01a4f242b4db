#ifndef TOLLWALK_FIXTURES_HPP
#define TOLLWALK_FIXTURES_HPP

#include <string>
#include <vector>

#include "tollwalk/axioms.hpp"
#include "tollwalk/transit.hpp"

namespace tollwalk {

// Hand-built independence examples: nine transit functions, each satisfying
// one set of axioms while violating another.  Entries are transcribed
// verbatim; pairs not listed default to {a,b}, and fixture 9 is the toll
// walk transit function of the 3-fan.
struct Fixture {
    TransitFunction r;
    // The universe's element names in index order (e.g. {"u","v","z","x","y"}).
    std::vector<std::string> labels;
    std::vector<AxiomId> expected_satisfied;
    std::vector<AxiomId> expected_violated;
};

// k in 1..9; throws contract_error otherwise.
Fixture fixture(int k);

}  // namespace tollwalk

#endif
