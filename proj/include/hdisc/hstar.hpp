#pragma once

#include <optional>

#include "hdisc/blowup.hpp"
#include "hdisc/coloring.hpp"
#include "hdisc/graph.hpp"

namespace hdisc {

// One block of the H-factor of H*: `multiplicity` copies of H placed with
// class c of `coloring` inside part `part_of_class[c]`.
struct HStarPlanBlock {
    LabeledColoring coloring;
    std::vector<int> part_of_class;
    long multiplicity = 0;
};

// Auxiliary complete r-partite graph H* with a perfect H-factor whose
// critical chromatic number approximates max{delta0, 1 - 1/chi*} from
// above within eta/4. The construction can be large, so the factor is
// returned as a plan; the explicit graph and factor are materialized only
// at desk scale.
struct HStarResult {
    bool trivial = false;         // r = 2: H* is H itself
    std::vector<long> part_sizes; // by construction order (r >= 3)
    Rational alpha;               // max{delta0, 1 - 1/chi*}
    std::vector<HStarPlanBlock> factor_plan;

    std::optional<Graph> h_star;          // set when small (or trivial)
    std::optional<ExplicitFactor> factor; // set when h_star is

    // construction internals (r >= 3, non-shortcut path)
    bool shortcut_balanced = false; // alpha + eta/4 >= (r-1)/r: plain |H|-blowup
    Rational beta;
    long k = 0, ell = 0, big_m = 0;
    std::vector<std::pair<long, long>> bezout; // (gap s, coefficient x_s)
    std::vector<long> b1_sizes, b2_sizes, b3_sizes, b4_sizes;

    long total_size() const {
        long t = 0;
        for (long p : part_sizes) t += p;
        return t;
    }
};

HStarResult build_h_star(const Graph& h, const Rational& eta);

} // namespace hdisc
