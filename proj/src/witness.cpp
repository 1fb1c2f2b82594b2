#include "hdisc/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hdisc/chromatic.hpp"
#include "hdisc/errors.hpp"
#include "hdisc/structure.hpp"
#include "hdisc/templates.hpp"

namespace hdisc {

Blowup expand(const BlowupSpec& spec) {
    const Graph& fg = spec.frame.colored.graph;
    if (static_cast<int>(spec.sizes.size()) != fg.n())
        throw ContractViolation("blowup: one size per frame vertex required");
    for (long s : spec.sizes)
        if (s < 0) throw ContractViolation("blowup: negative cluster size");

    Blowup b;
    b.sizes = spec.sizes;
    b.offset.resize(fg.n());
    long total = 0;
    for (int v = 0; v < fg.n(); ++v) {
        b.offset[v] = total;
        total += spec.sizes[v];
    }
    b.frame_vertex_of.resize(total);
    for (int v = 0; v < fg.n(); ++v)
        for (long i = 0; i < spec.sizes[v]; ++i)
            b.frame_vertex_of[b.offset[v] + i] = v;

    std::vector<Edge> edges;
    std::vector<int8_t> colors;
    for (size_t e = 0; e < fg.edges().size(); ++e) {
        auto [u, v] = fg.edges()[e];
        int8_t c = spec.frame.colored.color[e];
        for (long i = 0; i < spec.sizes[u]; ++i)
            for (long j = 0; j < spec.sizes[v]; ++j) {
                edges.emplace_back(static_cast<int>(b.offset[u] + i),
                                   static_cast<int>(b.offset[v] + j));
                colors.push_back(c);
            }
    }
    Graph g(static_cast<int>(total), edges);
    std::vector<int8_t> aligned(g.edges().size());
    for (size_t i = 0; i < edges.size(); ++i)
        aligned[g.edge_index(edges[i].first, edges[i].second)] = colors[i];
    b.colored = ColoredGraph(std::move(g), std::move(aligned));
    return b;
}

namespace {

// Copies are built as vertex-level target maps V(H) -> V(frame) and turned
// into disjoint embeddings by a per-cluster cursor.
using TargetMap = std::vector<int>;

void check_copy_valid(const Graph& h, const Graph& frame, const TargetMap& t) {
    for (const auto& [u, v] : h.edges())
        if (!frame.adjacent(t[u], t[v]))
            throw ContractViolation("witness construction produced an invalid copy");
}

std::vector<long> cluster_usage(int frame_n, const std::vector<TargetMap>& copies) {
    std::vector<long> usage(frame_n, 0);
    for (const TargetMap& t : copies)
        for (int fv : t) ++usage[fv];
    return usage;
}

ExplicitFactor allocate(const Blowup& b, const std::vector<TargetMap>& copies) {
    std::vector<long> cursor = b.offset;
    ExplicitFactor f;
    for (const TargetMap& t : copies) {
        std::vector<int> image(t.size());
        for (size_t v = 0; v < t.size(); ++v) image[v] = static_cast<int>(cursor[t[v]]++);
        f.copies.push_back(std::move(image));
    }
    for (int v = 0; v < static_cast<int>(b.sizes.size()); ++v)
        if (cursor[v] != b.offset[v] + b.sizes[v])
            throw ContractViolation("witness factor does not tile the blowup");
    return f;
}

long copies_discrepancy(const Graph& h, const Frame& frame,
                        const std::vector<TargetMap>& copies) {
    long d = 0;
    for (const TargetMap& t : copies)
        for (const auto& [u, v] : h.edges()) d += frame.colored.color_of(t[u], t[v]);
    return d;
}

// Assembles the witness: derives cluster sizes from the copies themselves,
// so each recipe only describes its copies.
TemplateWitness assemble(const Graph& h, const Frame& frame,
                         const std::vector<TargetMap>& copies_a,
                         const std::vector<TargetMap>& copies_b,
                         long expected_difference) {
    for (const TargetMap& t : copies_a) check_copy_valid(h, frame.colored.graph, t);
    for (const TargetMap& t : copies_b) check_copy_valid(h, frame.colored.graph, t);
    std::vector<long> ua = cluster_usage(frame.n(), copies_a);
    std::vector<long> ub = cluster_usage(frame.n(), copies_b);
    if (ua != ub)
        throw ContractViolation("witness factors disagree on cluster sizes");

    TemplateWitness w;
    w.spec = {frame, ua};
    Blowup b = expand(w.spec);
    w.factor_a = allocate(b, copies_a);
    w.factor_b = allocate(b, copies_b);
    w.disc_a = copies_discrepancy(h, frame, copies_a);
    w.disc_b = copies_discrepancy(h, frame, copies_b);
    w.expected_difference = expected_difference;
    if (w.disc_a - w.disc_b != expected_difference || expected_difference == 0)
        throw ContractViolation("witness discrepancy difference off its closed form");
    return w;
}

// Search for the frame as two r-cliques whose union is the whole edge set.
struct CliquePair {
    int r = 0;
    std::vector<int> l1, l2, shared, only1, only2;
};

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == r) { out.push_back(cur); return; }
        for (int v = start; v < g.n(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::optional<CliquePair> find_clique_pair(const Graph& g, int r, int shared_count) {
    if (g.n() != 2 * r - shared_count) return std::nullopt;
    auto cliques = cliques_of_size(g, r);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (size_t j = 0; j < cliques.size(); ++j) {
            if (i == j) continue;
            std::vector<int> inter;
            std::set_intersection(cliques[i].begin(), cliques[i].end(),
                                  cliques[j].begin(), cliques[j].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) != shared_count) continue;
            long edges = 0; // |E(L1) u E(L2)|
            long rr = static_cast<long>(r) * (r - 1) / 2;
            long ss = static_cast<long>(shared_count) * (shared_count - 1) / 2;
            edges = 2 * rr - ss;
            if (edges != g.edge_count()) continue;
            CliquePair cp;
            cp.r = r;
            cp.l1 = cliques[i];
            cp.l2 = cliques[j];
            cp.shared = inter;
            std::set_difference(cp.l1.begin(), cp.l1.end(), inter.begin(), inter.end(),
                                std::back_inserter(cp.only1));
            std::set_difference(cp.l2.begin(), cp.l2.end(), inter.begin(), inter.end(),
                                std::back_inserter(cp.only2));
            return cp;
        }
    return std::nullopt;
}

long clique_color_sum(const ColoredGraph& c, const std::vector<int>& verts) {
    long s = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) s += c.color_of(verts[i], verts[j]);
    return s;
}

// All bijections of `values` listed in a deterministic order.
std::vector<std::vector<int>> permutations_of(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    std::vector<std::vector<int>> out;
    do out.push_back(values);
    while (std::next_permutation(values.begin(), values.end()));
    return out;
}

LabeledColoring first_coloring(const Graph& h, int k) {
    LabeledColoring out;
    bool found = false;
    for_each_coloring(h, k, [&](const LabeledColoring& f) {
        out = f;
        found = true;
        return false;
    });
    if (!found) throw ContractViolation("graph admits no proper coloring at this k");
    return out;
}

// Permute class labels of f so that wanted[i] becomes class i.
LabeledColoring relabel_classes(const LabeledColoring& f, const std::vector<int>& wanted) {
    std::vector<int> to_new(f.k, -1);
    for (size_t i = 0; i < wanted.size(); ++i) to_new[wanted[i]] = static_cast<int>(i);
    int next = static_cast<int>(wanted.size());
    for (int c = 0; c < f.k; ++c)
        if (to_new[c] < 0) to_new[c] = next++;
    LabeledColoring out;
    out.k = f.k;
    out.assignment.resize(f.assignment.size());
    for (size_t v = 0; v < f.assignment.size(); ++v)
        out.assignment[v] = to_new[f.assignment[v]];
    return out;
}

WitnessResult refuse(const std::string& why) {
    WitnessResult r;
    r.refusal = why;
    return r;
}

WitnessResult witness_bipartite_components(const Graph& h, const Frame& frame);
WitnessResult witness_shared_rm1(const Graph& h, const Frame& frame);
WitnessResult witness_degree_to_parts(const Graph& h, const Frame& frame);
WitnessResult witness_regular_pair(const Graph& h, const Frame& frame);
WitnessResult witness_shared_rm2_parity(const Graph& h, const Frame& frame);
WitnessResult witness_nonmono_nonstar_c4(const Graph& h, const Frame& frame);
WitnessResult witness_structured_pair(const Graph& h, const Frame& frame);

WitnessResult witness_bipartite_components(const Graph& h, const Frame& frame) {
    if (chromatic_number(h) != 2) return refuse("H is not bipartite");
    // frame must be two disjoint edges of different colors
    const Graph& fg = frame.colored.graph;
    if (fg.n() != 4 || fg.edge_count() != 2) return refuse("frame is not a disjoint edge pair");
    auto [x1, y1] = fg.edges()[0];
    auto [x2, y2] = fg.edges()[1];
    if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2)
        return refuse("frame edges are not disjoint");
    if (frame.colored.color[0] == frame.colored.color[1])
        return refuse("frame edges have equal colors");
    if (frame.colored.color[0] < 0) { std::swap(x1, x2); std::swap(y1, y2); }

    auto comps = h.components();
    int ci = -1, cj = -1;
    Rational di, dj;
    for (size_t i = 0; i < comps.size() && ci < 0; ++i)
        for (size_t j = i + 1; j < comps.size() && ci < 0; ++j) {
            auto density = [&](const std::vector<int>& comp) {
                long e = 0;
                for (int v : comp)
                    for (int w : h.neighbors(v))
                        if (w > v) ++e;
                return rat(e, static_cast<long>(comp.size()));
            };
            Rational a = density(comps[i]), b = density(comps[j]);
            if (a != b) { ci = static_cast<int>(i); cj = static_cast<int>(j); di = a; dj = b; }
        }
    if (ci < 0) return refuse("no two components with different densities");
    const std::vector<int>& U = comps[ci];
    const std::vector<int>& W = comps[cj];

    LabeledColoring f = first_coloring(h, 2);
    std::vector<uint8_t> in_u(h.n(), 0), in_w(h.n(), 0);
    for (int v : U) in_u[v] = 1;
    for (int v : W) in_w[v] = 1;

    long nu = static_cast<long>(U.size()), nw = static_cast<long>(W.size());
    long eu = 0, ew = 0;
    for (const auto& [a, b] : h.edges()) {
        if (in_u[a]) ++eu;
        if (in_w[a]) ++ew;
    }

    // side s in {0,1}: the chosen 2-coloring class mapped to the first
    // vertex of the cluster pair
    auto make_copy = [&](const std::vector<uint8_t>& inner, int inner_side, int outer_side,
                         int a1, int b1, int a2, int b2) {
        TargetMap t(h.n());
        for (int v = 0; v < h.n(); ++v) {
            bool first_class = f.assignment[v] == 0;
            if (inner[v]) t[v] = (first_class == (inner_side == 0)) ? a1 : b1;
            else t[v] = (first_class == (outer_side == 0)) ? a2 : b2;
        }
        return t;
    };

    std::vector<TargetMap> fa, fb;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            for (long c = 0; c < nw; ++c) fa.push_back(make_copy(in_u, p, q, x1, y1, x2, y2));
            for (long c = 0; c < nu; ++c) fb.push_back(make_copy(in_w, p, q, x1, y1, x2, y2));
        }
    // all-outer copies keep both factors tiling the same clusters
    auto whole_outer = [&](int p) {
        TargetMap t(h.n());
        for (int v = 0; v < h.n(); ++v)
            t[v] = (f.assignment[v] == 0) == (p == 0) ? x2 : y2;
        return t;
    };
    for (int p = 0; p < 2; ++p) {
        for (long c = 0; c < 2 * nu; ++c) fa.push_back(whole_outer(p));
        for (long c = 0; c < 2 * nw; ++c) fb.push_back(whole_outer(p));
    }
    long expected = 2 * (4 * nw * eu - 4 * nu * ew);
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected);
    return res;
}

WitnessResult witness_shared_rm1(const Graph& h, const Frame& frame) {
    int r = chromatic_number(h);
    GraphBasics basics = graph_basics(h);
    if (basics.is_regular) return refuse("H is regular");
    auto cp = find_clique_pair(frame.colored.graph, r, r - 1);
    if (!cp) return refuse("frame is not two r-cliques sharing r-1 vertices");
    long c1 = clique_color_sum(frame.colored, cp->l1);
    long c2 = clique_color_sum(frame.colored, cp->l2);
    if (c1 == c2) return refuse("frame cliques have equal discrepancies");
    int s = cp->only1[0], t = cp->only2[0];

    int u = 0, v = 0;
    for (int w = 0; w < h.n(); ++w) {
        if (h.degree(w) < h.degree(u)) u = w;
        if (h.degree(w) > h.degree(v)) v = w;
    }
    LabeledColoring f = first_coloring(h, r);
    int iu = f.assignment[u], iv = f.assignment[v];

    // q_2..q_r = shared vertices; position p hosts class sigma[p]
    const std::vector<int>& shared = cp->shared;
    std::vector<int> others_not_iv, others_not_iu;
    for (int c = 0; c < r; ++c) {
        if (c != iv) others_not_iv.push_back(c);
        if (c != iu) others_not_iu.push_back(c);
    }

    auto base_copy = [&](int t_class, const std::vector<int>& sigma) {
        TargetMap tm(h.n());
        std::vector<int> cluster_of_class(r, -1);
        cluster_of_class[t_class] = t;
        for (size_t p = 0; p < sigma.size(); ++p) cluster_of_class[sigma[p]] = shared[p];
        for (int w = 0; w < h.n(); ++w) tm[w] = cluster_of_class[f.assignment[w]];
        return tm;
    };

    std::vector<TargetMap> fa, fb;
    for (const auto& sigma : permutations_of(others_not_iv)) {
        TargetMap x = base_copy(iv, sigma);
        fa.push_back(x);          // X_sigma
        x[v] = s;                 // X'_sigma: v moves to the private cluster
        fb.push_back(x);
    }
    for (const auto& tau : permutations_of(others_not_iu)) {
        TargetMap y = base_copy(iu, tau);
        fb.push_back(y);          // Y_tau
        y[u] = s;                 // Y'_tau
        fa.push_back(y);
    }

    long fact = 1;
    for (int i = 2; i <= r - 2; ++i) fact *= i;
    long expected = (c2 - c1) * fact * (h.degree(v) - h.degree(u));
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected);
    return res;
}

WitnessResult witness_degree_to_parts(const Graph& h, const Frame& frame) {
    int r = chromatic_number(h);
    if (r < 3) return refuse("H must have chromatic number at least 3");
    auto cp = find_clique_pair(frame.colored.graph, r, r - 1);
    if (!cp) return refuse("frame is not two r-cliques sharing r-1 vertices");
    const ColoredGraph& fc = frame.colored;
    if (clique_color_sum(fc, cp->l1) != clique_color_sum(fc, cp->l2))
        return refuse("frame cliques have different discrepancies");
    int x = cp->only1[0], y = cp->only2[0];
    int z = -1, w = -1;
    for (int q : cp->shared) {
        if (z < 0 && fc.color_of(x, q) == 1 && fc.color_of(y, q) == -1) z = q;
        if (w < 0 && fc.color_of(x, q) == -1 && fc.color_of(y, q) == 1) w = q;
    }
    if (z < 0 || w < 0) return refuse("frame lacks oppositely split shared vertices");

    // an r-coloring with a vertex seeing two classes in different degrees
    std::optional<LabeledColoring> found;
    int va = -1, j2 = -1, j3 = -1;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        for (int vv = 0; vv < h.n(); ++vv) {
            std::vector<int> deg(r, 0);
            for (int nb : h.neighbors(vv)) ++deg[f.assignment[nb]];
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) {
                    if (a == f.assignment[vv] || b == f.assignment[vv]) continue;
                    if (deg[a] != deg[b]) {
                        found = f;
                        va = vv; j2 = a; j3 = b;
                        return false;
                    }
                }
        }
        return true;
    });
    if (!found) return refuse("every vertex has equal degrees into all other classes");
    LabeledColoring f = relabel_classes(*found, {found->assignment[va], j2, j3});

    std::vector<int> rest; // classes 3..r-1 land on the remaining shared vertices
    for (int c = 3; c < r; ++c) rest.push_back(c);
    std::vector<int> rest_clusters;
    for (int q : cp->shared)
        if (q != z && q != w) rest_clusters.push_back(q);

    auto copy_of = [&](bool swap_23, const std::vector<int>& sigma, bool move_a1) {
        TargetMap t(h.n());
        std::vector<int> cluster_of_class(r, -1);
        cluster_of_class[0] = y;
        cluster_of_class[1] = swap_23 ? w : z;
        cluster_of_class[2] = swap_23 ? z : w;
        for (size_t p = 0; p < sigma.size(); ++p) cluster_of_class[sigma[p]] = rest_clusters[p];
        for (int vv = 0; vv < h.n(); ++vv) t[vv] = cluster_of_class[f.assignment[vv]];
        if (move_a1) t[va] = x;
        return t;
    };

    std::vector<TargetMap> fa, fb;
    for (const auto& sigma : permutations_of(rest)) {
        fa.push_back(copy_of(false, sigma, false)); // X
        fa.push_back(copy_of(true, sigma, true));   // Y'
        fb.push_back(copy_of(true, sigma, false));  // Y
        fb.push_back(copy_of(false, sigma, true));  // X'
    }

    long fact = 1;
    for (int i = 2; i <= r - 3; ++i) fact *= i;
    std::vector<int> dv(r, 0);
    for (int nb : h.neighbors(va)) ++dv[f.assignment[nb]];
    long expected = fact * (dv[1] - dv[2]) *
                    (fc.color_of(y, z) - fc.color_of(x, z) - fc.color_of(y, w) + fc.color_of(x, w));
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected);
    return res;
}

std::optional<int> plus_regular_degree(const ColoredGraph& c, const std::vector<int>& verts) {
    std::optional<int> d;
    for (int u : verts) {
        int deg = 0;
        for (int v : verts)
            if (v != u && c.color_of(u, v) == 1) ++deg;
        if (!d) d = deg;
        else if (*d != deg) return std::nullopt;
    }
    return d;
}

WitnessResult witness_regular_pair(const Graph& h, const Frame& frame) {
    int r = chromatic_number(h);
    if (r < 4) return refuse("H must have chromatic number at least 4");
    auto cp = find_clique_pair(frame.colored.graph, r, r - 2);
    if (!cp) return refuse("frame is not two r-cliques sharing r-2 vertices");
    auto d1 = plus_regular_degree(frame.colored, cp->l1);
    auto d2 = plus_regular_degree(frame.colored, cp->l2);
    if (!d1 || !d2) return refuse("a frame clique is not positively regular");
    if (*d1 == *d2) return refuse("frame cliques have equal positive degrees");
    if (!satisfies_c4(h, r).holds) return refuse("H violates the r-wise C4-condition");

    std::optional<LabeledColoring> unbalanced;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        if (*std::max_element(size.begin(), size.end()) !=
            *std::min_element(size.begin(), size.end())) {
            unbalanced = f;
            return false;
        }
        return true;
    });
    if (!unbalanced) return refuse("every r-coloring of H is balanced");

    // relabel classes ascending by size
    std::vector<long> size(r, 0);
    for (int c : unbalanced->assignment) ++size[c];
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return size[a] < size[b]; });
    LabeledColoring f = relabel_classes(*unbalanced, order);

    int x1 = cp->only1[0], y1 = cp->only1[1];
    int x2 = cp->only2[0], y2 = cp->only2[1];
    const std::vector<int>& shared = cp->shared;

    // low pair A_0,A_1 on an exclusive pair, classes 2..r-1 on the shared
    // clusters in order; or high pair A_{r-2},A_{r-1} exclusive, classes
    // 0..r-3 on the shared clusters
    auto low_copy = [&](int cx, int cy, bool swap) {
        TargetMap t(h.n());
        std::vector<int> cluster(r, -1);
        cluster[0] = swap ? cy : cx;
        cluster[1] = swap ? cx : cy;
        for (int c = 2; c < r; ++c) cluster[c] = shared[c - 2];
        for (int v = 0; v < h.n(); ++v) t[v] = cluster[f.assignment[v]];
        return t;
    };
    auto high_copy = [&](int cx, int cy, bool swap) {
        TargetMap t(h.n());
        std::vector<int> cluster(r, -1);
        cluster[r - 2] = swap ? cy : cx;
        cluster[r - 1] = swap ? cx : cy;
        for (int c = 0; c < r - 2; ++c) cluster[c] = shared[c];
        for (int v = 0; v < h.n(); ++v) t[v] = cluster[f.assignment[v]];
        return t;
    };

    long low = size[order[0]] + size[order[1]];
    long high = size[order[r - 2]] + size[order[r - 1]];
    std::vector<TargetMap> fa, fb;
    for (bool swap : {false, true}) {
        for (long c = 0; c < high; ++c) {
            fa.push_back(low_copy(x1, y1, swap));
            fb.push_back(low_copy(x2, y2, swap));
        }
        for (long c = 0; c < low; ++c) {
            fa.push_back(high_copy(x2, y2, swap));
            fb.push_back(high_copy(x1, y1, swap));
        }
    }
    // 4(d-d')(high-low) e(H)/(r-1), exact by the C4-condition
    Rational expected = Rational(4 * (*d1 - *d2)) * Rational(high - low) *
                        Rational(h.edge_count()) / Rational(r - 1);
    if (expected.get_den() != 1)
        throw ContractViolation("regular-pair closed form is not an integer");
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected.get_num().get_si());
    return res;
}

WitnessResult witness_shared_rm2_parity(const Graph& h, const Frame& frame) {
    int r = chromatic_number(h);
    if (r < 4) return refuse("H must have chromatic number at least 4");
    auto cp = find_clique_pair(frame.colored.graph, r, r - 2);
    bool merged = false;
    if (!cp) {
        cp = find_clique_pair(frame.colored.graph, r, r - 1);
        merged = cp.has_value();
    }
    if (!cp) return refuse("frame is not two r-cliques sharing r-2 or r-1 vertices");
    const ColoredGraph& fc = frame.colored;

    // V = r-2 shared vertices; e_i = L_i \ V is an edge
    std::vector<int> V = cp->shared;
    int x1, y1, x2, y2;
    if (!merged) {
        x1 = cp->only1[0]; y1 = cp->only1[1];
        x2 = cp->only2[0]; y2 = cp->only2[1];
    } else {
        int xx = V.back();
        V.pop_back();
        x1 = x2 = xx;
        y1 = cp->only1[0];
        y2 = cp->only2[0];
    }
    long q = clique_color_sum(fc, cp->l1) - fc.color_of(x1, y1) -
             clique_color_sum(fc, cp->l2) + fc.color_of(x2, y2);
    for (long bad : {0L, 2L * (r - 2), -2L * (r - 2), 4L * (r - 2), -4L * (r - 2)})
        if (q == bad) return refuse("frame parity sum is a forbidden multiple of 2(r-2)");

    auto gval = [&](int vv) {
        return fc.color_of(vv, x1) + fc.color_of(vv, y1) - fc.color_of(vv, x2) -
               fc.color_of(vv, y2);
    };
    int u = -1, v = -1;
    for (size_t i = 0; i < V.size() && u < 0; ++i)
        for (size_t j = i + 1; j < V.size() && u < 0; ++j)
            if (gval(V[i]) != gval(V[j])) { u = V[i]; v = V[j]; }
    if (u < 0) return refuse("all shared vertices have the same split pattern");

    if (!satisfies_c4(h, r).holds) return refuse("H violates the r-wise C4-condition");
    UniformReport uni = is_uniform(h);
    if (uni.uniform) return refuse("H is uniform");

    // coloring with e(A_1,A_2) != e(A_1,A_3)
    std::optional<LabeledColoring> found;
    int i1 = -1, i2 = -1, i3 = -1;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        for (int a = 0; a < r && !found; ++a)
            for (int b = 0; b < r && !found; ++b)
                for (int c = 0; c < r && !found; ++c) {
                    if (a == b || a == c || b == c) continue;
                    if (st.e[a][b] != st.e[a][c]) { found = f; i1 = a; i2 = b; i3 = c; }
                }
        return !found;
    });
    if (!found) return refuse("no coloring with unequal counts at one class");
    int i4 = 0;
    while (i4 == i1 || i4 == i2 || i4 == i3) ++i4;
    LabeledColoring f = relabel_classes(*found, {i1, i2, i3, i4});

    std::vector<int> rest_clusters;
    for (int w : V)
        if (w != u && w != v) rest_clusters.push_back(w);

    auto copy_of = [&](bool second_pair, bool swap_uv) {
        TargetMap t(h.n());
        std::vector<int> cluster(r, -1);
        cluster[0] = second_pair ? x2 : x1;
        cluster[3] = second_pair ? y2 : y1;
        cluster[1] = swap_uv ? v : u;
        cluster[2] = swap_uv ? u : v;
        for (int c = 4; c < r; ++c) cluster[c] = rest_clusters[c - 4];
        for (int vv = 0; vv < h.n(); ++vv) t[vv] = cluster[f.assignment[vv]];
        return t;
    };

    std::vector<TargetMap> fa{copy_of(false, false), copy_of(true, true)};
    std::vector<TargetMap> fb{copy_of(false, true), copy_of(true, false)};

    ColoringStats st = coloring_stats(h, f);
    long expected = (gval(u) - gval(v)) * (st.e[0][1] - st.e[0][2]);
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected);
    return res;
}

bool is_star_coloring(const ColoredGraph& c) {
    const Graph& g = c.graph;
    for (int head = 0; head < g.n(); ++head) {
        for (int sign : {1, -1}) {
            bool ok = true;
            for (size_t e = 0; e < g.edges().size() && ok; ++e) {
                auto [a, b] = g.edges()[e];
                bool at_head = a == head || b == head;
                if (c.color[e] != (at_head ? sign : -sign)) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

bool is_mono_coloring(const ColoredGraph& c) {
    for (size_t e = 1; e < c.color.size(); ++e)
        if (c.color[e] != c.color[0]) return false;
    return true;
}

WitnessResult witness_nonmono_nonstar_c4(const Graph& h, const Frame& frame) {
    const Graph& fg = frame.colored.graph;
    int k = fg.n();
    if (k < 4) return refuse("frame clique must have at least 4 vertices");
    if (fg.edge_count() != k * (k - 1) / 2) return refuse("frame is not a complete graph");
    if (is_mono_coloring(frame.colored)) return refuse("frame coloring is monochromatic");
    if (is_star_coloring(frame.colored)) return refuse("frame coloring is a star");

    C4Report c4 = satisfies_c4(h, k);
    if (c4.holds) return refuse("H satisfies the k-wise C4-condition");
    const auto& [f0, quad] = *c4.counterexample;

    const ColoredGraph& fc = frame.colored;
    int a1 = -1, a2 = -1, a3 = -1, a4 = -1;
    for (int p = 0; p < k && a1 < 0; ++p)
        for (int qv = 0; qv < k && a1 < 0; ++qv)
            for (int s = 0; s < k && a1 < 0; ++s)
                for (int t = 0; t < k && a1 < 0; ++t) {
                    if (p == qv || p == s || p == t || qv == s || qv == t || s == t) continue;
                    if (fc.color_of(p, qv) + fc.color_of(s, t) !=
                        fc.color_of(p, s) + fc.color_of(qv, t)) {
                        a1 = p; a2 = qv; a3 = s; a4 = t;
                    }
                }
    if (a1 < 0) return refuse("frame admits no parity-violating quadruple");

    LabeledColoring f = relabel_classes(f0, {quad[0], quad[1], quad[2], quad[3]});
    std::vector<int> rest_clusters;
    for (int vtx = 0; vtx < k; ++vtx)
        if (vtx != a1 && vtx != a2 && vtx != a3 && vtx != a4) rest_clusters.push_back(vtx);

    auto copy_of = [&](int c1, int c2, int c3, int c4v) {
        TargetMap t(h.n());
        std::vector<int> cluster(k, -1);
        cluster[0] = c1; cluster[1] = c2; cluster[2] = c3; cluster[3] = c4v;
        for (int c = 4; c < k; ++c) cluster[c] = rest_clusters[c - 4];
        for (int vv = 0; vv < h.n(); ++vv) t[vv] = cluster[f.assignment[vv]];
        return t;
    };

    std::vector<TargetMap> fa{copy_of(a1, a2, a3, a4), copy_of(a4, a3, a2, a1)};
    std::vector<TargetMap> fb{copy_of(a1, a3, a2, a4), copy_of(a4, a2, a3, a1)};

    ColoringStats st = coloring_stats(h, f);
    long eh = st.e[0][1] + st.e[2][3] - st.e[0][2] - st.e[1][3];
    long ch = fc.color_of(a1, a2) + fc.color_of(a3, a4) - fc.color_of(a1, a3) -
              fc.color_of(a2, a4);
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, ch * eh);
    return res;
}

WitnessResult witness_structured_pair(const Graph& h, const Frame& frame) {
    int r = chromatic_number(h);
    if (r < 3) return refuse("H must have chromatic number at least 3");
    auto cp = find_clique_pair(frame.colored.graph, r, r - 2);
    if (!cp) return refuse("frame is not two r-cliques sharing r-2 vertices");
    const ColoredGraph& fc = frame.colored;
    int x1 = cp->only1[0], y1 = cp->only1[1];
    int x2 = cp->only2[0], y2 = cp->only2[1];
    long ce1 = fc.color_of(x1, y1), ce2 = fc.color_of(x2, y2);
    long q = clique_color_sum(fc, cp->l1) - ce1 - clique_color_sum(fc, cp->l2) + ce2;
    Rational s = Rational(q) / Rational(2 * (r - 2));
    Rational t = Rational(ce1 - ce2);
    if (s == 0 && t == 0) return refuse("frame parameters are degenerate (s = t = 0)");

    StructuredSolution space = structured_space(h);
    if (space.rho_for(s, t))
        return refuse("H is (s,t)-structured for the frame's parameters");

    // two colorings whose structuredness functional differs
    std::optional<LabeledColoring> A, B;
    Rational val_num, val_den;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        Rational num = s * Rational(st.x[0][1]) + t * Rational(st.e[0][1]);
        Rational den = Rational(st.a[0] + st.a[1]);
        if (!A) { A = f; val_num = num; val_den = den; return true; }
        if (num * val_den != val_num * den) { B = f; return false; }
        return true;
    });
    if (!B) return refuse("the structuredness functional is constant; no witness here");

    ColoringStats sta = coloring_stats(h, *A);
    ColoringStats stb = coloring_stats(h, *B);
    long a12 = sta.a[0] + sta.a[1], b12 = stb.a[0] + stb.a[1];

    std::vector<int> rest(r - 2);
    std::iota(rest.begin(), rest.end(), 2);

    auto copy_of = [&](const LabeledColoring& f, int cx, int cy, bool swap,
                       const std::vector<int>& sigma) {
        TargetMap tm(h.n());
        std::vector<int> cluster(r, -1);
        cluster[0] = swap ? cy : cx;
        cluster[1] = swap ? cx : cy;
        for (size_t p = 0; p < sigma.size(); ++p) cluster[sigma[p]] = cp->shared[p];
        for (int vv = 0; vv < h.n(); ++vv) tm[vv] = cluster[f.assignment[vv]];
        return tm;
    };

    std::vector<TargetMap> fa, fb;
    for (const auto& sigma : permutations_of(rest))
        for (bool swap : {false, true}) {
            for (long c = 0; c < b12; ++c) {
                fa.push_back(copy_of(*A, x1, y1, swap, sigma));
                fb.push_back(copy_of(*A, x2, y2, swap, sigma));
            }
            for (long c = 0; c < a12; ++c) {
                fa.push_back(copy_of(*B, x2, y2, swap, sigma));
                fb.push_back(copy_of(*B, x1, y1, swap, sigma));
            }
        }

    long fact_rm3 = 1, fact_rm2 = 1;
    for (int i = 2; i <= r - 3; ++i) fact_rm3 *= i;
    for (int i = 2; i <= r - 2; ++i) fact_rm2 *= i;
    long expected = fact_rm3 * q * (b12 * sta.x[0][1] - a12 * stb.x[0][1]) +
                    2 * fact_rm2 * (ce1 - ce2) * (b12 * sta.e[0][1] - a12 * stb.e[0][1]);
    WitnessResult res;
    res.witness = assemble(h, frame, fa, fb, expected);
    return res;
}

} // namespace

BalancedBlowupFactor balanced_blowup_factor(const Graph& h) {
    int r = chromatic_number(h);
    LabeledColoring f = first_coloring(h, r);
    long fact = 1;
    for (int i = 2; i <= r - 1; ++i) fact *= i;

    BalancedBlowupFactor out;
    out.spec.frame = mono_clique(r, +1);
    out.spec.sizes.assign(r, fact * h.n());
    Blowup b = expand(out.spec);

    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<TargetMap> copies;
    do {
        TargetMap t(h.n());
        for (int v = 0; v < h.n(); ++v) t[v] = perm[f.assignment[v]];
        copies.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.factor = allocate(b, copies);
    return out;
}

WitnessRecipe witness_recipe_from_string(const std::string& name) {
    if (name == "bipartite-components") return WitnessRecipe::BipartiteComponents;
    if (name == "shared-rm1") return WitnessRecipe::SharedRm1;
    if (name == "degree-to-parts") return WitnessRecipe::DegreeToParts;
    if (name == "regular-pair") return WitnessRecipe::RegularPair;
    if (name == "shared-rm2-parity") return WitnessRecipe::SharedRm2Parity;
    if (name == "nonmono-nonstar-c4") return WitnessRecipe::NonMonoNonStarC4;
    if (name == "structured-pair") return WitnessRecipe::StructuredPair;
    throw ParseError("unknown witness recipe: " + name);
}

std::string witness_recipe_name(WitnessRecipe r) {
    switch (r) {
        case WitnessRecipe::BipartiteComponents: return "bipartite-components";
        case WitnessRecipe::SharedRm1: return "shared-rm1";
        case WitnessRecipe::DegreeToParts: return "degree-to-parts";
        case WitnessRecipe::RegularPair: return "regular-pair";
        case WitnessRecipe::SharedRm2Parity: return "shared-rm2-parity";
        case WitnessRecipe::NonMonoNonStarC4: return "nonmono-nonstar-c4";
        case WitnessRecipe::StructuredPair: return "structured-pair";
    }
    return "?";
}

WitnessResult template_witness(WitnessRecipe recipe, const Graph& h, const Frame& frame) {
    switch (recipe) {
        case WitnessRecipe::BipartiteComponents: return witness_bipartite_components(h, frame);
        case WitnessRecipe::SharedRm1: return witness_shared_rm1(h, frame);
        case WitnessRecipe::DegreeToParts: return witness_degree_to_parts(h, frame);
        case WitnessRecipe::RegularPair: return witness_regular_pair(h, frame);
        case WitnessRecipe::SharedRm2Parity: return witness_shared_rm2_parity(h, frame);
        case WitnessRecipe::NonMonoNonStarC4: return witness_nonmono_nonstar_c4(h, frame);
        case WitnessRecipe::StructuredPair: return witness_structured_pair(h, frame);
    }
    throw ContractViolation("unknown recipe");
}

LowerBoundCase lower_bound_case_from_string(const std::string& name) {
    if (name == "regular-3/4") return LowerBoundCase::Regular34;
    if (name == "component-density") return LowerBoundCase::ComponentDensity;
    if (name == "butterfly") return LowerBoundCase::Butterfly;
    if (name == "c4-1mod4") return LowerBoundCase::C4K1Mod4;
    if (name == "c4-regular") return LowerBoundCase::C4Regular;
    if (name == "structured-r3") return LowerBoundCase::StructuredR3;
    if (name == "structured-general") return LowerBoundCase::StructuredGeneral;
    throw ParseError("unknown lower-bound case: " + name);
}

std::string lower_bound_case_name(LowerBoundCase c) {
    switch (c) {
        case LowerBoundCase::Regular34: return "regular-3/4";
        case LowerBoundCase::ComponentDensity: return "component-density";
        case LowerBoundCase::Butterfly: return "butterfly";
        case LowerBoundCase::C4K1Mod4: return "c4-1mod4";
        case LowerBoundCase::C4Regular: return "c4-regular";
        case LowerBoundCase::StructuredR3: return "structured-r3";
        case LowerBoundCase::StructuredGeneral: return "structured-general";
    }
    return "?";
}

namespace {

LowerBoundResult lb_refuse(const std::string& why) {
    LowerBoundResult r;
    r.refusal = why;
    return r;
}

// K_k coloring with a regular positive part built from circulant offsets.
ColoredGraph circulant_plus(int k, int degree) {
    if (degree % 2 != 0) throw ContractViolation("circulant_plus: degree must be even");
    Graph g = complete_graph(k);
    std::vector<int8_t> colors(g.edges().size());
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        int d = std::min((v - u + k) % k, (u - v + k) % k);
        colors[e] = d <= degree / 2 ? 1 : -1;
    }
    return ColoredGraph(std::move(g), std::move(colors));
}

} // namespace

LowerBoundResult lower_bound_construction(const Graph& h, LowerBoundCase which, long m, int k) {
    LowerBoundResult res;
    const long nh = h.n();
    switch (which) {
        case LowerBoundCase::Regular34: {
            if (!graph_basics(h).is_regular) return lb_refuse("H is not regular");
            if (m % 4 != 0 || m % nh != 0) return lb_refuse("m must be divisible by 4 and |H|");
            Blowup b = expand({star_clique(4, +1), std::vector<long>(4, m / 4)});
            res.construction = {b.colored, rat(3, 4), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::ComponentDensity: {
            if (!graph_basics(h).component_density)
                return lb_refuse("components do not share one density");
            if (m % 2 != 0 || m % nh != 0) return lb_refuse("m must be divisible by 2 and |H|");
            std::vector<Edge> edges;
            std::vector<int8_t> colors;
            for (long a = 0; a < m / 2; ++a)
                for (long b2 = a + 1; b2 < m / 2; ++b2) {
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b2));
                    colors.push_back(1);
                }
            for (long a = m / 2; a < m; ++a)
                for (long b2 = a + 1; b2 < m; ++b2) {
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b2));
                    colors.push_back(-1);
                }
            Graph g(static_cast<int>(m), edges);
            std::vector<int8_t> aligned(g.edges().size());
            for (size_t i = 0; i < edges.size(); ++i)
                aligned[g.edge_index(edges[i].first, edges[i].second)] = colors[i];
            res.construction = {ColoredGraph(std::move(g), std::move(aligned)),
                                rat(m / 2 - 1, m), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::Butterfly: {
            if (chromatic_number(h) != 3) return lb_refuse("chromatic number is not 3");
            ButterflyStatus st = butterfly_status(h);
            int type = 0;
            for (int t = 1; t <= 3; ++t)
                if (!st.by_type[t - 1].is_template) { type = t; break; }
            if (type == 0) return lb_refuse("every butterfly is a template for H");
            if (m % 7 != 0 || m % nh != 0) return lb_refuse("m must be divisible by 7 and |H|");
            Blowup b = expand({butterfly(type), {3 * m / 7, m / 7, m / 7, m / 7, m / 7}});
            res.construction = {b.colored, rat(4, 7), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::C4K1Mod4: {
            if (k < 5 || k % 4 != 1) return lb_refuse("k must be at least 5 with k = 1 mod 4");
            if (!satisfies_c4(h, k).holds) return lb_refuse("H violates the k-wise C4-condition");
            if (m % k != 0 || m % nh != 0) return lb_refuse("m must be divisible by k and |H|");
            ColoredGraph c = circulant_plus(k, (k - 1) / 2);
            Blowup b = expand({custom_frame(c, "half-regular"), std::vector<long>(k, m / k)});
            res.construction = {b.colored, rat(k - 1, k), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::C4Regular: {
            if (k < 4 || k % 4 == 1) return lb_refuse("k must be at least 4 with k != 1 mod 4");
            if (!graph_basics(h).is_regular) return lb_refuse("H is not regular");
            if (!satisfies_c4(h, k).holds) return lb_refuse("H violates the k-wise C4-condition");
            if (m % (4 * k) != 0 || m % nh != 0)
                return lb_refuse("m must be divisible by 4k and |H|");
            int ell;
            long plus;
            if (k % 4 == 0) { ell = k / 2; plus = 0; }
            else if (k % 4 == 2) { ell = (k - 2) / 2; plus = m / (2 * k); }
            else { ell = (k - 3) / 2; plus = 3 * m / (4 * k); }

            // K_{k-1} with an ell-regular positive part, plus a special
            // cluster whose edges are recolored by the V+/V- split.
            ColoredGraph u_part = circulant_plus(k - 1, ell);
            std::vector<Edge> fedges = u_part.graph.edges();
            std::vector<int8_t> fcolors = u_part.color;
            for (int uu = 0; uu < k - 1; ++uu) {
                fedges.emplace_back(uu, k - 1);
                fcolors.push_back(1); // overwritten below per blowup vertex
            }
            Graph fgraph(k, fedges);
            std::vector<int8_t> aligned(fgraph.edges().size());
            for (size_t i = 0; i < fedges.size(); ++i)
                aligned[fgraph.edge_index(fedges[i].first, fedges[i].second)] = fcolors[i];
            Blowup b = expand({custom_frame(ColoredGraph(fgraph, aligned), "c4-regular"),
                               std::vector<long>(k, m / k)});

            // recolor: first `plus` vertices of the special cluster carry +1
            ColoredGraph host = b.colored;
            long v_off = b.offset[k - 1];
            for (size_t e = 0; e < host.graph.edges().size(); ++e) {
                auto [a, bb] = host.graph.edges()[e];
                long hi = std::max(a, bb);
                if (hi >= v_off)
                    host.color[e] = (hi - v_off) < plus ? 1 : -1;
            }
            res.construction = {host, rat(k - 1, k), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::StructuredR3: {
            if (chromatic_number(h) != 3) return lb_refuse("chromatic number is not 3");
            if (!structured_space(h).rho_for(1, 2))
                return lb_refuse("H is not (1,2)-structured");
            if ((8 * m) % nh != 0) return lb_refuse("8m must be divisible by |H|");
            Blowup b = expand({star_clique(3, +1), {2 * m, 3 * m, 3 * m}});
            res.construction = {b.colored, rat(5, 8), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
        case LowerBoundCase::StructuredGeneral: {
            int r = chromatic_number(h);
            if (r < 6 || (r % 4 != 2 && r % 4 != 3))
                return lb_refuse("chromatic number must be at least 6 with r = 2,3 mod 4");
            StructuredSolution space = structured_space(h);
            Rational C;
            bool found = false;
            if (space.rho_for(0, 1)) { C = 0; found = true; }
            else {
                for (int t = -2; t <= 2 && !found; ++t) {
                    if (!space.rho_for(1, t)) continue;
                    if (!satisfies_c4(h, r).holds)
                        return lb_refuse("H violates the r-wise C4-condition");
                    C = Rational(-2) / Rational(2 * r - 4 + t);
                    found = true;
                }
            }
            if (!found) return lb_refuse("H is not structured in any admissible direction");
            Rational xr = (Rational(r - 3) - Rational(r - 1) * C) * Rational(m) /
                          Rational(static_cast<long>(r - 2) * (r + 1));
            if (xr.get_den() != 1) return lb_refuse("m does not make the small part integral");
            long x = xr.get_num().get_si();
            if ((m - x) % (r - 1) != 0) return lb_refuse("m does not make the large parts integral");
            long y = (m - x) / (r - 1);
            if (m % nh != 0) return lb_refuse("m must be divisible by |H|");

            // all edges at vertex 0 positive, total discrepancy exactly 1
            Graph kr = complete_graph(r);
            long total = kr.edge_count();
            long plus_needed = (total + 1) / 2;
            std::vector<int8_t> colors(kr.edges().size(), -1);
            long placed = 0;
            for (size_t e = 0; e < kr.edges().size(); ++e)
                if (kr.edges()[e].first == 0) { colors[e] = 1; ++placed; }
            for (size_t e = 0; e < kr.edges().size() && placed < plus_needed; ++e)
                if (colors[e] < 0) { colors[e] = 1; ++placed; }
            std::vector<long> sizes(r, y);
            sizes[0] = x;
            Blowup b = expand({custom_frame(ColoredGraph(kr, colors), "skew"), sizes});
            res.construction = {b.colored, rat(m - y, m), FactorClaim::AllFactorsZero,
                                lower_bound_case_name(which)};
            return res;
        }
    }
    return lb_refuse("unknown case");
}

} // namespace hdisc
