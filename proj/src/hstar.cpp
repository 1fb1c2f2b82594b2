#include "hdisc/hstar.hpp"

#include <algorithm>
#include <numeric>

#include "hdisc/chromatic.hpp"
#include "hdisc/errors.hpp"
#include "hdisc/templates.hpp"

namespace hdisc {

namespace {

// Materialize the explicit graph and factor only below this order.
constexpr long kMaterializeLimit = 2000;

// Smallest-denominator rational in [lo, hi]; ties broken by the smaller
// numerator (the scan from below does that automatically).
Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw ContractViolation("simplest_rational_in: empty interval");
    for (long q = 1;; ++q) {
        Rational p = lo * Rational(q);
        BigInt pn = p.get_num(), pd = p.get_den();
        BigInt pc;
        mpz_cdiv_q(pc.get_mpz_t(), pn.get_mpz_t(), pd.get_mpz_t());
        Rational cand = Rational(pc) / Rational(q);
        cand.canonicalize();
        if (cand <= hi) return cand;
        if (q > 1000000) throw ContractViolation("simplest_rational_in: no denominator found");
    }
}

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Graph complete_multipartite(const std::vector<long>& parts) {
    long n = 0;
    for (long p : parts) n += p;
    std::vector<long> off(parts.size());
    long acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) { off[i] = acc; acc += parts[i]; }
    std::vector<Edge> edges;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (long a = 0; a < parts[i]; ++a)
                for (long b = 0; b < parts[j]; ++b)
                    edges.emplace_back(static_cast<int>(off[i] + a),
                                       static_cast<int>(off[j] + b));
    return Graph(static_cast<int>(n), std::move(edges));
}

// First r-coloring of h with a class of the wanted size, relabeled so it
// sits last.
LabeledColoring coloring_with_last_class_size(const Graph& h, int r, long want) {
    LabeledColoring out;
    bool found = false;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        int idx = -1;
        for (int c = 0; c < r; ++c)
            if (size[c] == want) { idx = c; break; }
        if (idx < 0) return true;
        out.k = r;
        out.assignment.resize(f.assignment.size());
        for (size_t v = 0; v < f.assignment.size(); ++v) {
            int c = f.assignment[v];
            if (c == idx) c = r - 1;
            else if (c == r - 1) c = idx;
            out.assignment[v] = c;
        }
        found = true;
        return false;
    });
    if (!found) throw ContractViolation("no coloring with the requested class size");
    return out;
}

// First r-coloring with two classes whose sizes differ by s, relabeled so
// the larger is class 0 and the smaller class 1.
LabeledColoring coloring_with_gap(const Graph& h, int r, long s) {
    LabeledColoring out;
    bool found = false;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        for (int i = 0; i < r && !found; ++i)
            for (int j = 0; j < r && !found; ++j) {
                if (i == j || size[i] - size[j] != s) continue;
                std::vector<int> to_new(r, -1);
                to_new[i] = 0;
                to_new[j] = 1;
                int next = 2;
                for (int c = 0; c < r; ++c)
                    if (to_new[c] < 0) to_new[c] = next++;
                out.k = r;
                out.assignment.resize(f.assignment.size());
                for (size_t v = 0; v < f.assignment.size(); ++v)
                    out.assignment[v] = to_new[f.assignment[v]];
                found = true;
            }
        return !found;
    });
    if (!found) throw ContractViolation("no coloring with the requested size gap");
    return out;
}

std::vector<int> cyclic_map(int r, int modulus, int shift) {
    // classes 0..modulus-1 rotate by shift, classes >= modulus stay put
    std::vector<int> part_of_class(r);
    for (int j = 0; j < r; ++j)
        part_of_class[j] = j < modulus ? (j + shift) % modulus : j;
    return part_of_class;
}

void verify_plan(const Graph& h, const HStarResult& res) {
    const int r = static_cast<int>(res.part_sizes.size());
    std::vector<long> fill(r, 0);
    for (const HStarPlanBlock& block : res.factor_plan) {
        std::vector<long> size(r, 0);
        for (int c : block.coloring.assignment) ++size[c];
        std::vector<bool> used(r, false);
        for (int c = 0; c < r; ++c) {
            int p = block.part_of_class[c];
            if (p < 0 || p >= r || (used[p] && size[c] > 0))
                throw ContractViolation("H* plan maps two classes into one part");
            if (size[c] > 0) used[p] = true;
            fill[p] += block.multiplicity * size[c];
        }
    }
    for (int p = 0; p < r; ++p)
        if (fill[p] != res.part_sizes[p])
            throw ContractViolation("H* plan does not tile the parts exactly");
    (void)h;
}

void materialize(const Graph& h, HStarResult& res) {
    if (res.total_size() > kMaterializeLimit) return;
    res.h_star = complete_multipartite(res.part_sizes);
    const int r = static_cast<int>(res.part_sizes.size());
    std::vector<long> cursor(r);
    long acc = 0;
    for (int i = 0; i < r; ++i) { cursor[i] = acc; acc += res.part_sizes[i]; }
    ExplicitFactor factor;
    for (const HStarPlanBlock& block : res.factor_plan)
        for (long c = 0; c < block.multiplicity; ++c) {
            std::vector<int> image(h.n());
            for (int v = 0; v < h.n(); ++v) {
                int p = block.part_of_class[block.coloring.assignment[v]];
                image[v] = static_cast<int>(cursor[p]++);
            }
            factor.copies.push_back(std::move(image));
        }
    res.factor = std::move(factor);
}

} // namespace

HStarResult build_h_star(const Graph& h, const Rational& eta) {
    if (eta <= 0 || eta > 1) throw ContractViolation("build_h_star: eta must be in (0,1]");
    HStarResult res;
    const int r = chromatic_number(h);
    ChromaticProfile pr = chromatic_profile(h);

    if (r == 2) {
        res.trivial = true;
        res.h_star = h;
        std::vector<int> identity(h.n());
        std::iota(identity.begin(), identity.end(), 0);
        res.factor = ExplicitFactor{{identity}};
        res.alpha = Rational(1) - Rational(1) / pr.chi_star; // delta0 = 0 at r = 2
        return res;
    }

    Delta0Result d0 = delta0(h);
    Rational chi_bound = Rational(1) - Rational(1) / pr.chi_star;
    res.alpha = std::max(d0.value, chi_bound);
    const long nh = h.n();
    const long sig = pr.sigma;

    LabeledColoring base = coloring_with_last_class_size(h, r, sig);

    if (res.alpha + eta / 4 >= Rational(r - 1) / Rational(r)) {
        // balanced |H|-blowup shortcut
        res.shortcut_balanced = true;
        res.part_sizes.assign(r, nh);
        for (int i = 0; i < r; ++i)
            res.factor_plan.push_back({base, cyclic_map(r, r, i), 1});
        verify_plan(h, res);
        materialize(h, res);
        return res;
    }

    if (!pr.hcf_is_one)
        throw ContractViolation("alpha below (r-1)/r forces hcf(H) = 1; profile disagrees");

    // beta in [1 - alpha - eta/5, 1 - alpha - eta/10], smallest denominator
    res.beta = simplest_rational_in(Rational(1) - res.alpha - eta / 5,
                                    Rational(1) - res.alpha - eta / 10);

    res.b1_sizes.assign(r - 1, nh - sig);
    res.b1_sizes.push_back((r - 1) * sig);
    res.b2_sizes.assign(r, nh);

    // k copies of B2 and ell copies of B1 make 1/chi_cr(B3) = beta
    Rational qrat = (Rational(nh - sig) - Rational(r - 1) * Rational(nh) * res.beta) /
                    (Rational(r) * Rational(nh) * res.beta - Rational(nh));
    res.ell = qrat.get_den().get_si();
    res.k = qrat.get_num().get_si();
    if (res.k <= 0 || res.ell <= 0)
        throw ContractViolation("beta interval must force positive blowup multipliers");
    res.b3_sizes.assign(r - 1, res.k * nh + res.ell * (nh - sig));
    res.b3_sizes.push_back(res.k * nh + res.ell * (r - 1) * sig);
    long b3_total = 0;
    for (long s : res.b3_sizes) b3_total += s;

    // Bezout coefficients over the nonzero size gaps
    std::vector<long> gaps;
    for (long d : pr.d_set)
        if (d != 0) gaps.push_back(d);
    std::sort(gaps.begin(), gaps.end());
    if (gaps.empty()) throw ContractViolation("hcf = 1 requires a nonzero coloring gap");
    std::vector<long> coeff;
    long g = 0;
    for (long d : gaps) {
        long u, v;
        long gg = ext_gcd(g, d, u, v);
        for (long& c : coeff) c *= u;
        coeff.push_back(v);
        g = gg;
    }
    if (g != 1) throw ContractViolation("gap gcd is not 1 despite hcf(H) = 1");
    for (size_t i = 0; i < gaps.size(); ++i) res.bezout.emplace_back(gaps[i], coeff[i]);

    // B4 parts from the gap colorings
    std::vector<LabeledColoring> gap_coloring;
    std::vector<std::vector<long>> gap_sizes;
    for (long d : gaps) {
        LabeledColoring f = coloring_with_gap(h, r, d);
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        gap_coloring.push_back(std::move(f));
        gap_sizes.push_back(std::move(size));
    }
    res.b4_sizes.assign(r, 0);
    for (size_t i = 0; i < gaps.size(); ++i) {
        long x = coeff[i];
        if (x == 0) continue;
        const std::vector<long>& sz = gap_sizes[i];
        if (x > 0) {
            res.b4_sizes[0] += x * sz[0];
            res.b4_sizes[1] += x * sz[1];
        } else {
            res.b4_sizes[0] += -x * sz[1];
            res.b4_sizes[1] += -x * sz[0];
        }
        for (int c = 2; c < r; ++c) res.b4_sizes[c] += std::abs(x) * sz[c];
    }
    if (res.b4_sizes[0] - res.b4_sizes[1] != 1)
        throw ContractViolation("Bezout perturbation must shift the first part by one");
    long a_total = 0;
    for (long s : res.b4_sizes) a_total += s;

    // Smallest M meeting the approximation and minimum-degree demands and
    // keeping the last part smallest.
    const Rational target_low = res.alpha;
    const Rational target_high = res.alpha + eta / 4;
    const Rational mindeg_need = Rational(1) - res.beta - eta / 10;
    for (long M = 1;; ++M) {
        if (M > 100000000) throw ContractViolation("no admissible M found");
        std::vector<long> b(r);
        for (int i = 0; i < r; ++i) b[i] = res.b4_sizes[i] + a_total * M * res.b3_sizes[i];
        long total = 0, mx = 0;
        for (long s : b) { total += s; mx = std::max(mx, s); }
        bool last_smallest = true;
        for (int i = 0; i + 1 < r; ++i)
            if (b[i] < b[r - 1]) last_smallest = false;
        if (!last_smallest) continue;
        Rational inv_chi_cr = Rational(total - b[r - 1]) / (Rational(r - 1) * Rational(total));
        Rational one_minus = Rational(1) - inv_chi_cr;
        if (one_minus < target_low || one_minus > target_high) continue;
        Rational mindeg = Rational(total - mx) / Rational(total);
        if (!(mindeg > mindeg_need)) continue;
        if (d0.value < Rational(r - 1) / Rational(r) && !(mindeg > d0.value)) continue;
        res.big_m = M;
        res.part_sizes = b;
        break;
    }

    // Plan: one B4 block, then a_total*M copies of B3 = k B2-blocks plus
    // ell B1-blocks each.
    for (size_t i = 0; i < gaps.size(); ++i) {
        long x = coeff[i];
        if (x == 0) continue;
        std::vector<int> direct(r);
        std::iota(direct.begin(), direct.end(), 0);
        if (x > 0) {
            res.factor_plan.push_back({gap_coloring[i], direct, x});
        } else {
            std::vector<int> swapped = direct;
            std::swap(swapped[0], swapped[1]);
            res.factor_plan.push_back({gap_coloring[i], swapped, -x});
        }
    }
    const long reps = a_total * res.big_m;
    for (int i = 0; i < r; ++i)
        res.factor_plan.push_back({base, cyclic_map(r, r, i), reps * res.k});
    for (int i = 0; i < r - 1; ++i)
        res.factor_plan.push_back({base, cyclic_map(r, r - 1, i), reps * res.ell});

    verify_plan(h, res);
    materialize(h, res);
    return res;
}

} // namespace hdisc
