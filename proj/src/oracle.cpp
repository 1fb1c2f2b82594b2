#include "hdisc/oracle.hpp"

#include <algorithm>
#include <set>

#include "hdisc/coloring.hpp"
#include "hdisc/errors.hpp"

namespace hdisc {

std::vector<std::vector<int>> enumerate_copies(const Graph& h, const Graph& host) {
    // Copies are edge subgraphs: dedupe embeddings by their image edge set,
    // equivalently by the automorphism-minimal image vector.
    std::vector<std::vector<int>> auts = automorphisms(h);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;

    // injective embedding search, vertices by decreasing degree
    std::vector<int> order(h.n());
    for (int i = 0; i < h.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });

    std::vector<int> map(h.n(), -1);
    std::vector<bool> used(host.n(), false);
    std::function<void(int)> rec = [&](int depth) {
        if (depth == h.n()) {
            std::vector<int> canon = map;
            for (const auto& aut : auts) {
                std::vector<int> img(h.n());
                for (int v = 0; v < h.n(); ++v) img[v] = map[aut[v]];
                if (img < canon) canon = img;
            }
            if (seen.insert(canon).second) out.push_back(canon);
            return;
        }
        int v = order[depth];
        for (int t = 0; t < host.n(); ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int w : h.neighbors(v)) {
                if (map[w] >= 0 && !host.adjacent(map[w], t)) { ok = false; break; }
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
    std::sort(out.begin(), out.end());
    return out;
}

FactorEnumeration enumerate_perfect_factors(
    const Graph& h, const ColoredGraph& host, long budget,
    const std::function<bool(const ExplicitFactor&)>& visit) {
    if (h.n() == 0) throw ContractViolation("enumerate_perfect_factors: empty pattern");
    if (host.graph.n() % h.n() != 0)
        throw ContractViolation("host order not divisible by |H|");

    FactorEnumeration stats;
    std::vector<std::vector<int>> copies = enumerate_copies(h, host.graph);
    const int n = host.graph.n();

    // copies covering each host vertex
    std::vector<std::vector<int>> covering(n);
    for (size_t c = 0; c < copies.size(); ++c)
        for (int v : copies[c]) covering[v].push_back(static_cast<int>(c));

    std::vector<bool> vertex_used(n, false);
    std::vector<int> chosen;
    bool stopped = false;

    std::function<void()> rec = [&]() {
        if (stopped || stats.truncated) return;
        if (++stats.nodes > budget) { stats.truncated = true; return; }

        // most constrained uncovered vertex
        int best = -1;
        long best_count = -1;
        for (int v = 0; v < n; ++v) {
            if (vertex_used[v]) continue;
            long count = 0;
            for (int c : covering[v]) {
                bool free = true;
                for (int w : copies[c])
                    if (vertex_used[w]) { free = false; break; }
                if (free) ++count;
            }
            if (best < 0 || count < best_count) { best = v; best_count = count; }
            if (count == 0) break;
        }
        if (best < 0) {
            ExplicitFactor f;
            for (int c : chosen) f.copies.push_back(copies[c]);
            if (!visit(f)) stopped = true;
            return;
        }
        if (best_count == 0) return;
        for (int c : covering[best]) {
            bool free = true;
            for (int w : copies[c])
                if (vertex_used[w]) { free = false; break; }
            if (!free) continue;
            for (int w : copies[c]) vertex_used[w] = true;
            chosen.push_back(c);
            rec();
            chosen.pop_back();
            for (int w : copies[c]) vertex_used[w] = false;
            if (stopped || stats.truncated) return;
        }
    };
    rec();
    return stats;
}

DiscrepancySummary discrepancy_multiset(const Graph& h, const ColoredGraph& host, long budget) {
    DiscrepancySummary s;
    FactorEnumeration fe = enumerate_perfect_factors(h, host, budget, [&](const ExplicitFactor& f) {
        long d = 0;
        for (const auto& copy : f.copies)
            for (const auto& [u, v] : h.edges()) d += host.color_of(copy[u], copy[v]);
        ++s.values[d];
        ++s.factor_count;
        return true;
    });
    s.truncated = fe.truncated;
    return s;
}

namespace {

// Folded embedding types for blowup hosts: cluster usage vector plus the
// copy discrepancy.
struct BlowupCopyType {
    std::vector<long> usage;
    long disc = 0;
    Homomorphism rep;
};

std::vector<BlowupCopyType> blowup_copy_types(const Graph& h, const Frame& frame) {
    std::vector<BlowupCopyType> types;
    std::map<std::pair<std::vector<long>, long>, size_t> index;
    for_each_homomorphism(h, frame.colored.graph, [&](const Homomorphism& hom) {
        std::vector<long> usage(frame.n(), 0);
        for (int t : hom.map) ++usage[t];
        long disc = 0;
        for (const auto& [u, v] : h.edges())
            disc += frame.colored.color_of(hom.map[u], hom.map[v]);
        auto key = std::make_pair(usage, disc);
        if (index.find(key) == index.end()) {
            index[key] = types.size();
            types.push_back({std::move(usage), disc, hom});
        }
        return true;
    });
    return types;
}

// Enumerate multisets of copy types meeting the cluster budgets exactly;
// reports the distinct achievable discrepancies (stops after two).
struct CompositionScan {
    const std::vector<BlowupCopyType>& types;
    std::vector<long> budget;
    std::map<long, std::vector<long>> found; // disc -> multiplicity per type
    std::vector<long> counts;

    CompositionScan(const std::vector<BlowupCopyType>& t, std::vector<long> b)
        : types(t), budget(std::move(b)), counts(t.size(), 0) {}

    bool done() const { return found.size() >= 2; }

    void rec(size_t idx, long disc) {
        if (done()) return;
        bool spent = true;
        for (long b : budget)
            if (b != 0) { spent = false; break; }
        if (spent) {
            if (found.find(disc) == found.end()) found[disc] = counts;
            return;
        }
        if (idx == types.size()) return;
        // max multiplicity of this type under the remaining budget
        long max_mult = -1;
        for (size_t v = 0; v < budget.size(); ++v) {
            if (types[idx].usage[v] == 0) continue;
            long m = budget[v] / types[idx].usage[v];
            if (max_mult < 0 || m < max_mult) max_mult = m;
        }
        if (max_mult < 0) max_mult = 0; // type uses nothing; skip it
        for (long m = max_mult; m >= 0 && !done(); --m) {
            for (size_t v = 0; v < budget.size(); ++v) budget[v] -= m * types[idx].usage[v];
            counts[idx] = m;
            rec(idx + 1, disc + m * types[idx].disc);
            counts[idx] = 0;
            for (size_t v = 0; v < budget.size(); ++v) budget[v] += m * types[idx].usage[v];
        }
    }
};

} // namespace

BruteforceTemplateResult bruteforce_is_template(const Frame& frame, const Graph& h,
                                                long max_total) {
    BruteforceTemplateResult res;
    if (h.n() == 0) return res;
    std::vector<BlowupCopyType> types = blowup_copy_types(h, frame);
    if (types.empty()) return res;
    const int F = frame.n();

    // size vectors in increasing total then lexicographic order
    std::vector<long> sizes(F, 0);
    std::function<bool(int, long)> scan = [&](int v, long remaining) -> bool {
        if (v == F - 1) {
            sizes[v] = remaining;
            CompositionScan cs(types, sizes);
            cs.rec(0, 0);
            if (cs.found.size() >= 2) {
                auto it = cs.found.begin();
                res.found = true;
                res.sizes = sizes;
                res.disc_a = it->first;
                std::vector<long> mult_a = it->second;
                ++it;
                res.disc_b = it->first;
                std::vector<long> mult_b = it->second;

                // materialize the two factors with per-cluster cursors
                Blowup b = expand({frame, sizes});
                auto realize = [&](const std::vector<long>& mult) {
                    ExplicitFactor f;
                    std::vector<long> cursor = b.offset;
                    for (size_t tix = 0; tix < types.size(); ++tix)
                        for (long c = 0; c < mult[tix]; ++c) {
                            std::vector<int> image(h.n());
                            for (int hv = 0; hv < h.n(); ++hv)
                                image[hv] = static_cast<int>(cursor[types[tix].rep.map[hv]]++);
                            f.copies.push_back(std::move(image));
                        }
                    return f;
                };
                res.factor_a = realize(mult_a);
                res.factor_b = realize(mult_b);
                return true;
            }
            return false;
        }
        for (long s = 0; s <= remaining; ++s) {
            sizes[v] = s;
            if (scan(v + 1, remaining - s)) return true;
        }
        return false;
    };

    for (long total = h.n(); total <= max_total; total += h.n())
        if (scan(0, total)) return res;
    return res;
}

std::map<long, long> blowup_discrepancy_profile(const Frame& frame, const Graph& h,
                                                const std::vector<long>& sizes) {
    std::vector<BlowupCopyType> types = blowup_copy_types(h, frame);
    std::map<long, long> profile;
    std::vector<long> budget = sizes;
    std::function<void(size_t, long)> rec = [&](size_t idx, long disc) {
        bool spent = true;
        for (long b : budget)
            if (b != 0) { spent = false; break; }
        if (spent) {
            ++profile[disc];
            return;
        }
        if (idx == types.size()) return;
        long max_mult = -1;
        for (size_t v = 0; v < budget.size(); ++v) {
            if (types[idx].usage[v] == 0) continue;
            long mm = budget[v] / types[idx].usage[v];
            if (max_mult < 0 || mm < max_mult) max_mult = mm;
        }
        if (max_mult < 0) max_mult = 0;
        for (long mult = max_mult; mult >= 0; --mult) {
            for (size_t v = 0; v < budget.size(); ++v) budget[v] -= mult * types[idx].usage[v];
            rec(idx + 1, disc + mult * types[idx].disc);
            for (size_t v = 0; v < budget.size(); ++v) budget[v] += mult * types[idx].usage[v];
        }
    };
    rec(0, 0);
    return profile;
}

FactorCheck verify_factor(const Graph& h, const ColoredGraph& host, const ExplicitFactor& f) {
    FactorCheck out;
    std::vector<bool> used(host.graph.n(), false);
    long covered = 0;
    for (const auto& copy : f.copies) {
        if (static_cast<int>(copy.size()) != h.n()) {
            out.reason = "copy with wrong vertex count";
            return out;
        }
        for (int v : copy) {
            if (v < 0 || v >= host.graph.n()) { out.reason = "copy vertex out of range"; return out; }
            if (used[v]) { out.reason = "copies share a vertex"; return out; }
            used[v] = true;
            ++covered;
        }
        for (const auto& [u, v] : h.edges())
            if (!host.graph.adjacent(copy[u], copy[v])) {
                out.reason = "copy does not preserve an edge";
                return out;
            }
    }
    if (covered != host.graph.n()) {
        out.reason = "factor is not spanning";
        return out;
    }
    out.valid = true;
    for (const auto& copy : f.copies)
        for (const auto& [u, v] : h.edges()) out.discrepancy += host.color_of(copy[u], copy[v]);
    return out;
}

} // namespace hdisc
