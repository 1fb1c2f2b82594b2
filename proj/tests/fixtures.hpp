#pragma once

#include <numeric>
#include <random>

#include "hdisc/graph.hpp"

namespace hdisc::fixtures {

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph k4_minus_edge() {
    // vertices 0,1 adjacent to everything; 2,3 non-adjacent
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), std::move(e));
}

inline Graph p3_plus_k2() { return disjoint_union(path(3), path(2)); }

inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> off(parts.size());
    int acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) { off[i] = acc; acc += parts[i]; }
    std::vector<Edge> e;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (int a = 0; a < parts[i]; ++a)
                for (int b = 0; b < parts[j]; ++b)
                    e.emplace_back(off[i] + a, off[j] + b);
    return Graph(n, std::move(e));
}

inline Graph k222_minus_edge() {
    Graph g = complete_multipartite({2, 2, 2});
    std::vector<Edge> e = g.edges();
    e.erase(std::find(e.begin(), e.end(), Edge{0, 2}));
    return Graph(6, std::move(e));
}

// Tripartite graphs with one dominating vertex per part: vertex off[i] is
// adjacent to every vertex outside part i, which pins the 3-coloring.
// Extra cross edges between non-dominating vertices bring the pair counts
// up to the requested values.
inline Graph dominated_tripartite(const std::vector<int>& parts,
                                  const std::vector<long>& pair_counts) {
    const int r = static_cast<int>(parts.size());
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> off(parts.size());
    int acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) { off[i] = acc; acc += parts[i]; }

    std::vector<Edge> e;
    auto add = [&](int u, int v) { e.emplace_back(std::min(u, v), std::max(u, v)); };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            for (int b = 0; b < parts[j]; ++b)
                if (i < j || b != 0) add(off[i], off[j] + b); // avoid double dominator edge
        }
    // extras in lexicographic order among non-dominating pairs
    size_t pair_idx = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j, ++pair_idx) {
            long have = parts[i] + parts[j] - 1;
            long want = pair_counts[pair_idx];
            if (want < have) throw std::logic_error("pair count below dominator edges");
            long need = want - have;
            for (int a = 1; a < parts[i] && need > 0; ++a)
                for (int b = 1; b < parts[j] && need > 0; ++b) {
                    add(off[i] + a, off[j] + b);
                    --need;
                }
            if (need > 0) throw std::logic_error("pair count exceeds capacity");
        }
    return Graph(n, std::move(e));
}

// 121 vertices, parts 10/11/100, every pair count 110; uniform.
inline Graph example1() { return dominated_tripartite({10, 11, 100}, {110, 110, 110}); }

// 46 vertices, parts 5/20/21, counts 28/42/252; (1,2)-structured, rho 14.
inline Graph example2() { return dominated_tripartite({5, 20, 21}, {28, 42, 252}); }

// 46 vertices, parts 5/20/21, counts 67/66/51; (1,-1)-structured, rho 2.
inline Graph example3() { return dominated_tripartite({5, 20, 21}, {67, 66, 51}); }

// 9 vertices: complete 4-partite (3,2,2,2) minus a perfect matching on the
// six vertices outside the large part; 6-regular.
inline Graph example4() {
    Graph g = complete_multipartite({3, 2, 2, 2});
    std::vector<Edge> e = g.edges();
    for (Edge rem : {Edge{3, 5}, Edge{4, 7}, Edge{6, 8}})
        e.erase(std::find(e.begin(), e.end(), rem));
    return Graph(9, std::move(e));
}

inline std::vector<int> random_permutation(int n, unsigned seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace hdisc::fixtures
