#pragma once

#include <cstdint>
#include <optional>

#include "hdisc/blowup.hpp"
#include "hdisc/coloring.hpp"
#include "hdisc/frames.hpp"
#include "hdisc/lp.hpp"

namespace hdisc {

// Coloring of K_r encoded as a bitmask over the sorted edge list of K_r;
// a set bit means color +1.
ColoredGraph kr_coloring_from_mask(int r, uint32_t mask);
uint32_t mask_from_kr_coloring(const ColoredGraph& c);

// Orbit structure of the 2^C(r,2) colorings under vertex permutation and
// global color swap. Template status and the best zero-discrepancy blowup
// degree are constant on orbits, so LP work runs once per representative.
struct KrColoringOrbits {
    int r = 0;
    std::vector<uint32_t> canon; // mask -> smallest mask in its orbit
    std::vector<uint32_t> reps;  // sorted distinct representatives
};

KrColoringOrbits kr_coloring_orbits(int r);

struct TemplateCertificate {
    std::vector<long> part_sizes; // over frame vertices
    std::vector<std::pair<Homomorphism, BigInt>> factor_a;
    std::vector<std::pair<Homomorphism, BigInt>> factor_b;
    BigInt disc_a;
    BigInt disc_b;
};

struct TemplateDecision {
    bool is_template = false;
    std::optional<TemplateCertificate> certificate; // present when is_template
    Rational lp_value;
    std::string note; // "no-embedding" for vacuous frames
};

// Decides templatehood of a colored frame for H by the fractional
// two-factor program over embeddings H -> frame: both factors must realize
// the same cluster ratios, and the optimum of the discrepancy difference
// is positive exactly for templates.
TemplateDecision is_template(const Frame& frame, const Graph& h);

// All 2^C(r,2) colorings c of K_r with is_template((K_r,c), h) false,
// as sorted masks (labeled colorings, no isomorphism collapsing).
std::vector<uint32_t> nontemplate_colorings_kr(const Graph& h);

struct Delta0Witness {
    int r = 0;
    uint32_t coloring_mask = 0;        // member of K(H), parts ascending
    std::vector<Rational> part_ratios; // ascending, sum 1
    std::vector<std::pair<Homomorphism, BigInt>> zero_disc_factor;
    BigInt scale; // factor tiles the (scale * ratios)-blowup exactly
};

struct Delta0Result {
    int r = 0;
    Rational value;
    std::optional<Delta0Witness> witness; // present when value > 0
    std::vector<uint32_t> nontemplate_masks; // the set K(H)
};

// Largest normalized minimum degree of a blowup of a non-template K_r
// coloring carrying a zero-discrepancy perfect fractional H-factor;
// 0 when no such coloring admits one.
Delta0Result delta0(const Graph& h);

struct ButterflyStatus {
    std::array<TemplateDecision, 3> by_type; // butterfly types 1..3
    bool some_nontemplate = false;
};

// Requires chi(h) = 3.
ButterflyStatus butterfly_status(const Graph& h);

} // namespace hdisc
