#include "hdisc/templates.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

#include "hdisc/errors.hpp"
#include "hdisc/parallel.hpp"

namespace hdisc {

namespace {

std::vector<Edge> kr_edge_list(int r) {
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) edges.emplace_back(i, j);
    return edges;
}

// Embedding columns folded by (cluster marginals, discrepancy); the LP
// only sees these, while the representative embedding keeps certificates
// materializable.
struct HomColumn {
    std::vector<long> a;
    long g = 0;
    Homomorphism rep;
};

std::vector<HomColumn> hom_columns(const Graph& h, const Frame& frame) {
    std::map<std::pair<std::vector<long>, long>, size_t> index;
    std::vector<HomColumn> cols;
    for_each_homomorphism(h, frame.colored.graph, [&](const Homomorphism& hom) {
        std::vector<long> a(frame.n(), 0);
        for (int t : hom.map) ++a[t];
        long g = 0;
        for (const auto& [u, v] : h.edges())
            g += frame.colored.color_of(hom.map[u], hom.map[v]);
        auto key = std::make_pair(a, g);
        if (index.find(key) == index.end()) {
            index[key] = cols.size();
            cols.push_back({std::move(a), g, hom});
        }
        return true;
    });
    return cols;
}

// Labeled r-colorings of H folded by (class sizes, cross counts); the
// discrepancy under any coloring of K_r is recovered from the counts.
struct StatColumn {
    std::vector<long> a;
    std::vector<long> e_upper; // e_ij for i<j in kr_edge_list order
    LabeledColoring rep;
};

std::vector<StatColumn> stat_columns(const Graph& h, int r) {
    std::vector<Edge> pairs = kr_edge_list(r);
    std::map<std::pair<std::vector<long>, std::vector<long>>, size_t> index;
    std::vector<StatColumn> cols;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        std::vector<long> e_upper(pairs.size());
        for (size_t p = 0; p < pairs.size(); ++p)
            e_upper[p] = st.e[pairs[p].first][pairs[p].second];
        auto key = std::make_pair(st.a, e_upper);
        if (index.find(key) == index.end()) {
            index[key] = cols.size();
            cols.push_back({st.a, std::move(e_upper), f});
        }
        return true;
    });
    return cols;
}

} // namespace

ColoredGraph kr_coloring_from_mask(int r, uint32_t mask) {
    Graph g = complete_graph(r);
    std::vector<int8_t> colors(g.edges().size());
    for (size_t i = 0; i < colors.size(); ++i)
        colors[i] = (mask >> i) & 1 ? 1 : -1;
    return ColoredGraph(std::move(g), std::move(colors));
}

uint32_t mask_from_kr_coloring(const ColoredGraph& c) {
    uint32_t mask = 0;
    for (size_t i = 0; i < c.color.size(); ++i)
        if (c.color[i] > 0) mask |= uint32_t{1} << i;
    return mask;
}

KrColoringOrbits kr_coloring_orbits(int r) {
    std::vector<Edge> edges = kr_edge_list(r);
    const int ne = static_cast<int>(edges.size());
    if (ne > 31) throw ContractViolation("kr_coloring_orbits: r too large");
    const uint32_t count = uint32_t{1} << ne;
    const uint32_t full = count - 1;

    std::map<Edge, int> edge_index;
    for (int i = 0; i < ne; ++i) edge_index[edges[i]] = i;

    // Edge permutations induced by adjacent vertex transpositions; these
    // generate S_r, and together with the complement they generate the
    // whole symmetry group of the coloring set.
    std::vector<std::vector<int>> gens;
    for (int t = 0; t + 1 < r; ++t) {
        std::vector<int> perm(ne);
        for (int i = 0; i < ne; ++i) {
            auto [u, v] = edges[i];
            int uu = u == t ? t + 1 : (u == t + 1 ? t : u);
            int vv = v == t ? t + 1 : (v == t + 1 ? t : v);
            if (uu > vv) std::swap(uu, vv);
            perm[i] = edge_index[{uu, vv}];
        }
        gens.push_back(std::move(perm));
    }

    std::vector<uint32_t> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    auto unite = [&](uint32_t a, uint32_t b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (uint32_t m = 0; m < count; ++m) {
        for (const auto& perm : gens) {
            uint32_t img = 0;
            for (int i = 0; i < ne; ++i)
                if ((m >> i) & 1) img |= uint32_t{1} << perm[i];
            unite(m, img);
        }
        unite(m, m ^ full); // global color swap
    }

    KrColoringOrbits orbits;
    orbits.r = r;
    orbits.canon.resize(count);
    for (uint32_t m = 0; m < count; ++m) orbits.canon[m] = find(m);
    for (uint32_t m = 0; m < count; ++m)
        if (orbits.canon[m] == m) orbits.reps.push_back(m);
    return orbits;
}

TemplateDecision is_template(const Frame& frame, const Graph& h) {
    if (chromatic_number(h) < 2) throw ContractViolation("is_template: H has no edge");
    if (frame.n() == 0) throw ContractViolation("is_template: empty frame");

    TemplateDecision dec;
    std::vector<HomColumn> cols = hom_columns(h, frame);
    if (cols.empty()) {
        dec.is_template = false;
        dec.lp_value = 0;
        dec.note = "no-embedding";
        return dec;
    }

    const int C = static_cast<int>(cols.size());
    const int F = frame.n();
    // vars: x_0..x_{C-1}, y_0..y_{C-1}, a_0..a_{F-1}
    LpBuilder lp(2 * C + F);
    for (int v = 0; v < F; ++v) {
        std::vector<Rational> rx(2 * C + F, 0), ry(2 * C + F, 0);
        for (int c = 0; c < C; ++c) {
            rx[c] = Rational(cols[c].a[v]);
            ry[C + c] = Rational(cols[c].a[v]);
        }
        rx[2 * C + v] = -1;
        ry[2 * C + v] = -1;
        lp.add_eq(std::move(rx), 0);
        lp.add_eq(std::move(ry), 0);
    }
    {
        std::vector<Rational> row(2 * C + F, 0);
        for (int v = 0; v < F; ++v) row[2 * C + v] = 1;
        lp.add_eq(std::move(row), 1);
    }
    for (int c = 0; c < C; ++c) {
        lp.set_objective(c, Rational(cols[c].g));
        lp.set_objective(C + c, Rational(-cols[c].g));
    }

    LpOutcome out = solve_lp(lp.build());
    if (out.unbounded())
        throw ContractViolation("template LP unbounded; marginal rows should bound it");
    if (out.infeasible())
        throw ContractViolation("template LP infeasible despite existing embedding");

    dec.lp_value = out.value;
    dec.is_template = out.value > 0;
    if (!dec.is_template) return dec;

    std::vector<Rational> pt = LpBuilder::structural(out.point, 2 * C + F);
    BigInt scale = common_denominator(pt);
    TemplateCertificate cert;
    cert.part_sizes.resize(F);
    for (int v = 0; v < F; ++v) {
        Rational s = pt[2 * C + v] * Rational(scale);
        cert.part_sizes[v] = static_cast<long>(s.get_num().get_si());
    }
    cert.disc_a = 0;
    cert.disc_b = 0;
    for (int c = 0; c < C; ++c) {
        Rational wx = pt[c] * Rational(scale);
        Rational wy = pt[C + c] * Rational(scale);
        if (wx != 0) {
            cert.factor_a.emplace_back(cols[c].rep, wx.get_num());
            cert.disc_a += wx.get_num() * cols[c].g;
        }
        if (wy != 0) {
            cert.factor_b.emplace_back(cols[c].rep, wy.get_num());
            cert.disc_b += wy.get_num() * cols[c].g;
        }
    }
    // Exact arithmetic re-validation of the scaled certificate.
    for (int v = 0; v < F; ++v) {
        BigInt ma = 0, mb = 0;
        for (const auto& [hom, w] : cert.factor_a) {
            long av = std::count(hom.map.begin(), hom.map.end(), v);
            ma += w * av;
        }
        for (const auto& [hom, w] : cert.factor_b) {
            long av = std::count(hom.map.begin(), hom.map.end(), v);
            mb += w * av;
        }
        if (ma != cert.part_sizes[v] || mb != cert.part_sizes[v])
            throw LpOracleMismatch("template certificate marginals do not tile the blowup");
    }
    if (cert.disc_a == cert.disc_b)
        throw LpOracleMismatch("template certificate with equal discrepancies");
    dec.certificate = std::move(cert);
    return dec;
}

std::vector<uint32_t> nontemplate_colorings_kr(const Graph& h) {
    int r = chromatic_number(h);
    KrColoringOrbits orbits = kr_coloring_orbits(r);
    std::vector<char> rep_is_template = parallel_map<char>(
        orbits.reps.size(), [&](size_t i) -> char {
            Frame f = custom_frame(kr_coloring_from_mask(r, orbits.reps[i]), "kr-mask");
            return is_template(f, h).is_template ? 1 : 0;
        });
    std::vector<bool> keep(orbits.canon.size(), false);
    for (size_t i = 0; i < orbits.reps.size(); ++i)
        if (!rep_is_template[i]) keep[orbits.reps[i]] = true;
    std::vector<uint32_t> result;
    for (uint32_t m = 0; m < orbits.canon.size(); ++m)
        if (keep[orbits.canon[m]]) result.push_back(m);
    return result;
}

namespace {

// Max normalized minimum degree of a blowup of (K_r, c) admitting a
// zero-discrepancy perfect fractional H-factor, with the witness point.
struct Delta0PerColoring {
    bool feasible = false;
    Rational value;
    std::vector<Rational> ratios; // by K_r vertex
    std::vector<Rational> weights; // by stat column
};

Delta0PerColoring delta0_for_coloring(const std::vector<StatColumn>& cols, int r,
                                      uint32_t mask) {
    std::vector<Edge> pairs = kr_edge_list(r);
    std::vector<long> g(cols.size(), 0);
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t p = 0; p < pairs.size(); ++p)
            g[c] += cols[c].e_upper[p] * (((mask >> p) & 1) ? 1 : -1);

    const int C = static_cast<int>(cols.size());
    // vars: x_0..x_{C-1}, a_0..a_{r-1}, d (the min-degree ratio)
    LpBuilder lp(C + r + 1);
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> row(C + r + 1, 0);
        for (int c = 0; c < C; ++c) row[c] = Rational(cols[c].a[i]);
        row[C + i] = -1;
        lp.add_eq(std::move(row), 0);
    }
    {
        std::vector<Rational> row(C + r + 1, 0);
        for (int i = 0; i < r; ++i) row[C + i] = 1;
        lp.add_eq(std::move(row), 1);
    }
    {
        std::vector<Rational> row(C + r + 1, 0);
        for (int c = 0; c < C; ++c) row[c] = Rational(g[c]);
        lp.add_eq(std::move(row), 0);
    }
    for (int i = 0; i < r; ++i) {
        // d <= 1 - a_i, i.e. the blowup's min degree ratio
        std::vector<Rational> row(C + r + 1, 0);
        row[C + i] = 1;
        row[C + r] = 1;
        lp.add_le(std::move(row), 1);
    }
    lp.set_objective(C + r, 1);

    Delta0PerColoring res;
    LpOutcome out = solve_lp(lp.build());
    if (out.infeasible()) return res;
    if (out.unbounded()) throw ContractViolation("delta0 LP unbounded");
    res.feasible = true;
    res.value = out.value;
    std::vector<Rational> pt = LpBuilder::structural(out.point, C + r + 1);
    res.weights.assign(pt.begin(), pt.begin() + C);
    res.ratios.assign(pt.begin() + C, pt.begin() + C + r);
    return res;
}

} // namespace

Delta0Result delta0(const Graph& h) {
    int r = chromatic_number(h);
    if (r < 2) throw ContractViolation("delta0: H has no edge");
    Delta0Result result;
    result.r = r;
    result.nontemplate_masks = nontemplate_colorings_kr(h);
    result.value = 0;

    if (r == 2) return result; // every blowup of K_2 is monochromatic

    // Work per orbit; the value is constant on orbits and the witness for
    // a representative transfers by relabeling.
    KrColoringOrbits orbits = kr_coloring_orbits(r);
    std::vector<bool> nontemplate(orbits.canon.size(), false);
    for (uint32_t m : result.nontemplate_masks) nontemplate[m] = true;

    std::vector<StatColumn> cols = stat_columns(h, r);
    std::vector<uint32_t> work;
    for (uint32_t rep : orbits.reps)
        if (nontemplate[rep]) work.push_back(rep);
    std::vector<Delta0PerColoring> per_rep = parallel_map<Delta0PerColoring>(
        work.size(), [&](size_t i) { return delta0_for_coloring(cols, r, work[i]); });

    for (size_t w_i = 0; w_i < work.size(); ++w_i) {
        uint32_t rep = work[w_i];
        const Delta0PerColoring& per = per_rep[w_i];
        if (!per.feasible || per.value <= result.value) continue;
        if (per.value <= 0) continue;

        // Relabel so part ratios ascend with the vertex index.
        std::vector<int> order(r);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return per.ratios[a] < per.ratios[b];
        });
        std::vector<int> pos(r); // old vertex -> new vertex
        for (int i = 0; i < r; ++i) pos[order[i]] = i;

        ColoredGraph relabeled = kr_coloring_from_mask(r, rep).relabeled(pos);
        Delta0Witness w;
        w.r = r;
        w.coloring_mask = mask_from_kr_coloring(relabeled);
        w.part_ratios.resize(r);
        for (int i = 0; i < r; ++i) w.part_ratios[i] = per.ratios[order[i]];

        std::vector<Rational> all = per.weights;
        for (const Rational& q : per.ratios) all.push_back(q);
        w.scale = common_denominator(all);
        for (size_t c = 0; c < cols.size(); ++c) {
            Rational wt = per.weights[c] * Rational(w.scale);
            if (wt == 0) continue;
            Homomorphism hom;
            hom.map.resize(h.n());
            for (int v = 0; v < h.n(); ++v) hom.map[v] = pos[cols[c].rep.assignment[v]];
            w.zero_disc_factor.emplace_back(std::move(hom), wt.get_num());
        }
        result.value = per.value;
        result.witness = std::move(w);
    }

    // Re-validate the witness by direct arithmetic: the scaled factor must
    // tile the scaled blowup exactly and have discrepancy zero, and the
    // coloring must itself be a non-template.
    if (result.witness) {
        const Delta0Witness& w = *result.witness;
        if (!std::binary_search(result.nontemplate_masks.begin(),
                                result.nontemplate_masks.end(), w.coloring_mask))
            throw LpOracleMismatch("delta0 witness coloring is a template");
        ColoredGraph c = kr_coloring_from_mask(r, w.coloring_mask);
        BigInt disc = 0;
        std::vector<BigInt> marg(r, 0);
        for (const auto& [hom, wt] : w.zero_disc_factor) {
            long g = 0;
            for (const auto& [u, v] : h.edges()) g += c.color_of(hom.map[u], hom.map[v]);
            disc += wt * g;
            for (int t : hom.map) marg[t] += wt;
        }
        if (disc != 0) throw LpOracleMismatch("delta0 witness factor has nonzero discrepancy");
        for (int i = 0; i < r; ++i) {
            Rational expect = w.part_ratios[i] * Rational(w.scale);
            if (Rational(marg[i]) != expect)
                throw LpOracleMismatch("delta0 witness factor does not tile the blowup");
        }
    }
    return result;
}

ButterflyStatus butterfly_status(const Graph& h) {
    if (chromatic_number(h) != 3)
        throw ContractViolation("butterfly_status: chromatic number must be 3");
    ButterflyStatus st;
    for (int t = 1; t <= 3; ++t) {
        st.by_type[t - 1] = is_template(butterfly(t), h);
        if (!st.by_type[t - 1].is_template) st.some_nontemplate = true;
    }
    return st;
}

} // namespace hdisc
