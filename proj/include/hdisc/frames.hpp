#pragma once

#include <string>

#include "hdisc/graph.hpp"

namespace hdisc {

// A small colored graph tested for templatehood.
struct Frame {
    ColoredGraph colored;
    std::string name;

    int n() const { return colored.graph.n(); }
};

// Catalog entries.
//
// mono_clique(k, c): K_k with every edge colored c.
// star_clique(k, c): K_k whose color-c edges form a spanning star; the
//   star head is vertex 0.
// butterfly(type): two triangles {0,1,2} and {0,3,4} sharing vertex 0 with
//   the antisymmetric coloring c(01)=-c(03), c(02)=-c(04), c(12)=-c(34).
//   type 1: monochromatic wings (+ wing, - wing);
//   type 2: wings are stars headed at the shared vertex;
//   type 3: wings are stars headed at outer vertices.
// edge_pair(c1, c2): two disjoint edges (0,1) and (2,3).
// clique_pair(r, shared, colors): two K_r's sharing `shared` vertices
//   (r-1 or r-2), colors listed edge by edge in the union's sorted order.
Frame mono_clique(int k, int color);
Frame star_clique(int k, int color);
Frame butterfly(int type);
Frame edge_pair(int c1, int c2);
Frame clique_pair(int r, int shared, const std::vector<int8_t>& colors);

// Two K_r's sharing `shared` vertices, uncolored shape. Vertices
// 0..r-shared-1 are L1-only, then the shared block, then L2-only.
Graph clique_pair_graph(int r, int shared);

// Frame from any colored graph.
Frame custom_frame(ColoredGraph g, std::string name);

// Parses catalog selectors like "mono:4:+", "star:3:-", "butterfly:2",
// "edgepair:+-", "cliquepair:3:2:++-...". Throws ParseError.
Frame frame_from_selector(const std::string& selector);

} // namespace hdisc
