#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdisc/rational.hpp"

namespace hdisc {

using Edge = std::pair<int, int>; // normalized u < v

// Simple undirected graph on dense vertices 0..n-1. Isolated vertices are
// legal: the declared n may exceed the largest endpoint.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return matrix_[static_cast<size_t>(u) * n_ + v] != 0; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Index of the normalized edge in edges(), or -1.
    int edge_index(int u, int v) const;

    std::vector<std::vector<int>> components() const;
    Graph relabeled(const std::vector<int>& perm) const; // vertex v becomes perm[v]

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint8_t> matrix_;
};

// Graph plus an edge coloring into {+1,-1}, aligned with Graph::edges().
struct ColoredGraph {
    Graph graph;
    std::vector<int8_t> color;

    ColoredGraph() = default;
    ColoredGraph(Graph g, std::vector<int8_t> colors);

    int color_of(int u, int v) const;
    int discrepancy() const; // e(G+) - e(G-)
    ColoredGraph swapped() const; // every edge color negated
    ColoredGraph relabeled(const std::vector<int>& perm) const;
};

struct GraphBasics {
    std::vector<std::vector<int>> components;
    std::vector<int> degrees;
    bool is_regular = false;
    int common_degree = -1; // set when is_regular
    long hcf_c = 0;         // gcd of component orders
    std::optional<Rational> component_density; // rho with e(U) = rho|U| for all components
};

GraphBasics graph_basics(const Graph& g);

// Edge-list format: first non-comment line is the vertex count, then one
// "u v" line per edge; '#' starts a comment. Colored variant has "u v c"
// lines with c in {+1,-1,+,-}.
Graph parse_edge_list(std::istream& in);
ColoredGraph parse_colored_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
ColoredGraph parse_colored_edge_list(const std::string& text);

std::string format_edge_list(const Graph& g);
std::string format_colored_edge_list(const ColoredGraph& g);

Graph complete_graph(int r);

} // namespace hdisc
