#pragma once

#include <functional>
#include <vector>

#include "hdisc/graph.hpp"

namespace hdisc {

// Proper ordered vertex coloring; classes may be empty and their order is
// significant. Class indices run 0..k-1.
struct LabeledColoring {
    int k = 0;
    std::vector<int> assignment; // vertex -> class
};

struct ColoringStats {
    std::vector<long> a;              // class sizes
    std::vector<std::vector<long>> e; // cross-class edge counts, symmetric
    std::vector<std::vector<long>> x; // x[i][j] = e(A_i u A_j, rest), symmetric
};

// Edge-preserving vertex map into a frame (edges are never collapsed).
struct Homomorphism {
    std::vector<int> map; // V(H) -> V(frame)
};

// Visits every proper function V(h) -> [k] exactly once in a deterministic
// order. The visitor returns false to stop early. Backtracking with
// vertices in decreasing-degree order and forward checking, so graphs with
// dominating vertices collapse to their forced colorings quickly.
void for_each_coloring(const Graph& h, int k,
                       const std::function<bool(const LabeledColoring&)>& visit);

std::vector<LabeledColoring> all_colorings(const Graph& h, int k);
long count_colorings(const Graph& h, int k);

int chromatic_number(const Graph& h);

// Minimum over proper chi(h)-colorings of the smallest class size.
long sigma(const Graph& h);

ColoringStats coloring_stats(const Graph& h, const LabeledColoring& f);

// Every edge-preserving map V(h) -> V(frame), each exactly once,
// deterministic order. Equals labeled k-colorings when frame = K_k.
void for_each_homomorphism(const Graph& h, const Graph& frame,
                           const std::function<bool(const Homomorphism&)>& visit);

std::vector<Homomorphism> all_homomorphisms(const Graph& h, const Graph& frame);

// Automorphisms of h (homomorphisms h -> h that are bijective; for simple
// graphs edge-preserving bijections are exactly the automorphisms used to
// deduplicate copies).
std::vector<std::vector<int>> automorphisms(const Graph& h);

} // namespace hdisc
