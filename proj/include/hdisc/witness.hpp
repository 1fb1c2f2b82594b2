#pragma once

#include <optional>
#include <string>

#include "hdisc/blowup.hpp"
#include "hdisc/graph.hpp"

namespace hdisc {

Blowup expand(const BlowupSpec& spec);

// The (r-1)!|H|-blowup of K_r together with the permutation-scheme factor
// placing one H-copy per ordering of the reference coloring's classes.
// For r >= 3 the factor has 2(r-2)! e(H) edges between every pair of
// clusters; for r = 2 the single pair carries all e(F) = 2 e(H) edges.
struct BalancedBlowupFactor {
    BlowupSpec spec; // over a +monochromatic K_r frame
    ExplicitFactor factor;
};

BalancedBlowupFactor balanced_blowup_factor(const Graph& h);

// Witness recipes. Each builds a blowup of the given frame and two perfect
// H-factors with different discrepancies, assuming its structural
// hypothesis on (h, frame); otherwise it refuses, naming the hypothesis.
enum class WitnessRecipe {
    BipartiteComponents,  // disconnected bipartite H, two +/- disjoint edges
    SharedRm1,            // non-regular H, two K_r's sharing r-1 vertices, c(L1) != c(L2)
    DegreeToParts,        // vertex with different degrees into two classes
    RegularPair,          // unbalanced coloring + r-wise C4, regular wings of different degree
    SharedRm2Parity,      // non-uniform H + r-wise C4, parity-violating shared pair
    NonMonoNonStarC4,     // H fails the k-wise C4-condition, K_k neither mono nor star
    StructuredPair,       // shared r-2 pair against a non-(s,t)-structured H
};

WitnessRecipe witness_recipe_from_string(const std::string& name);
std::string witness_recipe_name(WitnessRecipe r);

struct TemplateWitness {
    BlowupSpec spec;
    ExplicitFactor factor_a;
    ExplicitFactor factor_b;
    long disc_a = 0;
    long disc_b = 0;
    long expected_difference = 0; // the recipe's closed form
};

struct WitnessResult {
    std::optional<TemplateWitness> witness;
    std::string refusal; // set when the hypothesis fails

    bool ok() const { return witness.has_value(); }
};

WitnessResult template_witness(WitnessRecipe recipe, const Graph& h, const Frame& frame);

// Lower-bound hosts.
enum class LowerBoundCase {
    Regular34,         // regular H: (K_4,+)-star blowup, ratio 3/4
    ComponentDensity,  // uniform component density: two +/- cliques, ratio ~1/2
    Butterfly,         // a non-template butterfly blowup, ratio 4/7
    C4K1Mod4,          // k-wise C4, k = 1 mod 4: half-regular K_k blowup
    C4Regular,         // regular + k-wise C4, k != 1 mod 4: recolored blowup
    StructuredR3,      // r = 3, (1,2)-structured: star triangle blowup, ratio 5/8
    StructuredGeneral, // r >= 6, r = 2,3 mod 4, structured: skew K_r blowup
};

LowerBoundCase lower_bound_case_from_string(const std::string& name);
std::string lower_bound_case_name(LowerBoundCase c);

enum class FactorClaim { AllFactorsZero, AllFactorsEqual, NoFactor };

struct LowerBoundConstruction {
    ColoredGraph colored_graph;
    Rational min_degree_ratio;
    FactorClaim claim = FactorClaim::AllFactorsZero;
    std::string provenance;
};

struct LowerBoundResult {
    std::optional<LowerBoundConstruction> construction;
    std::string refusal;

    bool ok() const { return construction.has_value(); }
};

// `m` is the case's scale parameter; divisibility demands are checked and
// named in the refusal when violated. `k` is required by the two C4 cases.
LowerBoundResult lower_bound_construction(const Graph& h, LowerBoundCase which, long m,
                                          int k = 0);

} // namespace hdisc
