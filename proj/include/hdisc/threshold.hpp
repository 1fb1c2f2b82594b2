#pragma once

#include <optional>
#include <string>

#include "hdisc/chromatic.hpp"
#include "hdisc/graph.hpp"
#include "hdisc/templates.hpp"

namespace hdisc {

enum class TheoremCase {
    BipartiteRegular,
    BipartiteComponentDensity,
    BipartiteChiStar,
    TriRegular,
    TriButterfly,
    TriDefault,
    RCond1,
    RCond2,
    RDefault,
};

std::string theorem_case_name(TheoremCase c);

struct ThresholdReport {
    Rational delta_star;
    TheoremCase theorem_case = TheoremCase::BipartiteRegular;
    ChromaticProfile profile;
    Rational delta0_value;
    std::optional<Delta0Result> delta0_detail; // computed for r >= 3
    bool cond1 = false, cond2 = false;          // meaningful for r >= 4
    std::array<bool, 3> butterfly_is_template{}; // meaningful for r = 3
    bool some_butterfly_nontemplate = false;     // meaningful for r = 3
    std::optional<Rational> component_density;   // meaningful for r = 2
    bool regular = false;
    std::vector<std::pair<std::string, std::string>> trace; // evaluated predicates in order
};

// Conditions for r >= 4: (r+1)-wise C4 plus (r = 0 mod 4 or regular), and
// r-wise C4 plus regular.
std::pair<bool, bool> conditions(const Graph& h);

// The minimum-degree discrepancy threshold of H with the full case trace.
ThresholdReport delta_star(const Graph& h);

} // namespace hdisc
