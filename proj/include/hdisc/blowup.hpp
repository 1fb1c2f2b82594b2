#pragma once

#include <vector>

#include "hdisc/frames.hpp"

namespace hdisc {

// Blowup recipe: each frame vertex is replaced by a cluster of the stated
// size and each frame edge by a complete bipartite graph monochromatic in
// the frame edge's color. Sizes may be zero (the cluster is then absent).
struct BlowupSpec {
    Frame frame;
    std::vector<long> sizes; // per frame vertex, nonnegative

    long total() const {
        long t = 0;
        for (long s : sizes) t += s;
        return t;
    }
};

// Expanded blowup. Vertices are grouped by frame vertex in declaration
// order: cluster of frame vertex v occupies [offset[v], offset[v]+sizes[v]).
struct Blowup {
    ColoredGraph colored;
    std::vector<long> offset;
    std::vector<long> sizes;
    std::vector<int> frame_vertex_of; // blowup vertex -> frame vertex
};

Blowup expand(const BlowupSpec& spec);

// Vertex-disjoint copies of H covering a host; copies[c][v] is the host
// vertex carrying H-vertex v in copy c.
struct ExplicitFactor {
    std::vector<std::vector<int>> copies;
};

} // namespace hdisc
