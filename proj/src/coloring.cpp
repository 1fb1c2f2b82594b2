#include "hdisc/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "hdisc/errors.hpp"

namespace hdisc {

namespace {

std::vector<int> search_order(const Graph& h) {
    std::vector<int> order(h.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return h.degree(a) > h.degree(b);
    });
    return order;
}

// Shared backtracking core for homomorphisms H -> frame. Candidate sets
// are bitmasks over frame vertices, narrowed by forward checking as
// neighbors get mapped.
struct HomSearch {
    const Graph& h;
    const Graph& frame;
    const std::function<bool(const std::vector<int>&)>& visit;
    bool injective;
    std::vector<int> order, pos_of, map;
    std::vector<uint64_t> cand;
    std::vector<uint64_t> frame_adj;
    uint64_t used = 0;
    bool stopped = false;

    HomSearch(const Graph& h_, const Graph& frame_, bool inj,
              const std::function<bool(const std::vector<int>&)>& v)
        : h(h_), frame(frame_), visit(v), injective(inj) {
        if (frame.n() > 63) throw ContractViolation("frame too large (> 63 vertices)");
        order = search_order(h);
        pos_of.assign(h.n(), 0);
        for (int i = 0; i < h.n(); ++i) pos_of[order[i]] = i;
        map.assign(h.n(), -1);
        uint64_t all = frame.n() == 0 ? 0 : ((uint64_t{1} << frame.n()) - 1);
        cand.assign(h.n(), all);
        frame_adj.assign(frame.n(), 0);
        for (int t = 0; t < frame.n(); ++t)
            for (int w : frame.neighbors(t)) frame_adj[t] |= uint64_t{1} << w;
    }

    void run() {
        if (h.n() == 0) { stopped = !visit(map); return; }
        rec(0);
    }

    void rec(int depth) {
        if (stopped) return;
        if (depth == h.n()) {
            if (!visit(map)) stopped = true;
            return;
        }
        int v = order[depth];
        uint64_t options = cand[v];
        if (injective) options &= ~used;
        while (options && !stopped) {
            int t = std::countr_zero(options);
            options &= options - 1;
            map[v] = t;
            if (injective) used |= uint64_t{1} << t;

            // narrow unmapped neighbors to frame-neighbors of t
            std::vector<std::pair<int, uint64_t>> saved;
            bool dead = false;
            for (int w : h.neighbors(v)) {
                if (map[w] >= 0) continue;
                uint64_t nw = cand[w] & frame_adj[t];
                if (nw != cand[w]) {
                    saved.emplace_back(w, cand[w]);
                    cand[w] = nw;
                }
                if (nw == 0) { dead = true; break; }
            }
            if (!dead) rec(depth + 1);
            for (auto& [w, old] : saved) cand[w] = old;
            map[v] = -1;
            if (injective) used &= ~(uint64_t{1} << t);
        }
    }
};

} // namespace

void for_each_homomorphism(const Graph& h, const Graph& frame,
                           const std::function<bool(const Homomorphism&)>& visit) {
    Homomorphism hom;
    HomSearch s(h, frame, false, [&](const std::vector<int>& m) {
        hom.map = m;
        return visit(hom);
    });
    s.run();
}

std::vector<Homomorphism> all_homomorphisms(const Graph& h, const Graph& frame) {
    std::vector<Homomorphism> out;
    for_each_homomorphism(h, frame, [&](const Homomorphism& hom) {
        out.push_back(hom);
        return true;
    });
    return out;
}

void for_each_coloring(const Graph& h, int k,
                       const std::function<bool(const LabeledColoring&)>& visit) {
    if (k < 1) throw ContractViolation("coloring with k < 1");
    LabeledColoring f;
    f.k = k;
    Graph kk = complete_graph(k);
    HomSearch s(h, kk, false, [&](const std::vector<int>& m) {
        f.assignment = m;
        return visit(f);
    });
    s.run();
}

std::vector<LabeledColoring> all_colorings(const Graph& h, int k) {
    std::vector<LabeledColoring> out;
    for_each_coloring(h, k, [&](const LabeledColoring& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

long count_colorings(const Graph& h, int k) {
    long c = 0;
    for_each_coloring(h, k, [&](const LabeledColoring&) { ++c; return true; });
    return c;
}

int chromatic_number(const Graph& h) {
    if (h.n() == 0) throw ContractViolation("chromatic number of empty graph");
    for (int k = 1; k <= h.n(); ++k) {
        bool found = false;
        for_each_coloring(h, k, [&](const LabeledColoring&) { found = true; return false; });
        if (found) return k;
    }
    return h.n(); // unreachable for simple graphs
}

long sigma(const Graph& h) {
    int r = chromatic_number(h);
    long best = -1;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        long s = *std::min_element(size.begin(), size.end());
        if (best < 0 || s < best) best = s;
        return true;
    });
    return best;
}

ColoringStats coloring_stats(const Graph& h, const LabeledColoring& f) {
    if (static_cast<int>(f.assignment.size()) != h.n())
        throw ContractViolation("coloring_stats: assignment length mismatch");
    const int k = f.k;
    ColoringStats st;
    st.a.assign(k, 0);
    st.e.assign(k, std::vector<long>(k, 0));
    st.x.assign(k, std::vector<long>(k, 0));
    for (int c : f.assignment) {
        if (c < 0 || c >= k) throw ContractViolation("coloring_stats: class out of range");
        ++st.a[c];
    }
    for (const auto& [u, v] : h.edges()) {
        int cu = f.assignment[u], cv = f.assignment[v];
        if (cu == cv) throw ContractViolation("coloring_stats: improper coloring");
        ++st.e[cu][cv];
        ++st.e[cv][cu];
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            long s = 0;
            for (int l = 0; l < k; ++l)
                if (l != i && l != j) s += st.e[i][l] + st.e[j][l];
            st.x[i][j] = s;
        }
    return st;
}

std::vector<std::vector<int>> automorphisms(const Graph& h) {
    // Injective edge-preserving self-maps; on a finite simple graph these
    // are exactly the automorphisms once non-edges are also respected.
    std::vector<std::vector<int>> out;
    std::vector<int> order = search_order(h);
    std::vector<int> map(h.n(), -1);
    std::vector<bool> used(h.n(), false);

    std::function<void(int)> rec = [&](int depth) {
        if (depth == h.n()) { out.push_back(map); return; }
        int v = order[depth];
        for (int t = 0; t < h.n(); ++t) {
            if (used[t] || h.degree(t) != h.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < h.n() && ok; ++w) {
                if (map[w] < 0 || w == v) continue;
                if (h.adjacent(v, w) != h.adjacent(t, map[w])) ok = false;
            }
            if (!ok) continue;
            map[v] = t;
            used[t] = true;
            rec(depth + 1);
            map[v] = -1;
            used[t] = false;
        }
    };
    rec(0);
    return out;
}

} // namespace hdisc
