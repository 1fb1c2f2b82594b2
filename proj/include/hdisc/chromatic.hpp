#pragma once

#include <set>

#include "hdisc/coloring.hpp"
#include "hdisc/graph.hpp"

namespace hdisc {

struct ChromaticProfile {
    int r = 0;            // chromatic number
    long sigma = 0;       // smallest class over optimal colorings
    Rational chi_cr;      // (r-1)|H| / (|H|-sigma)
    std::set<long> d_set; // consecutive sorted-size gaps over all r-colorings
    long hcf_chi = 0;     // gcd of d_set; gcd of {} or all zeros is 0
    long hcf_c = 0;       // gcd of component orders
    bool hcf_is_one = false;
    Rational chi_star;    // chi_cr when hcf is one, else r
};

// Requires at least one edge (r >= 2).
ChromaticProfile chromatic_profile(const Graph& h);

} // namespace hdisc
