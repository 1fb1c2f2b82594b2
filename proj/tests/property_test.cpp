#include <doctest.h>

#include "fixtures.hpp"
#include "hdisc/oracle.hpp"
#include "hdisc/structure.hpp"
#include "hdisc/templates.hpp"
#include "hdisc/threshold.hpp"
#include "hdisc/witness.hpp"

using namespace hdisc;
namespace fx = hdisc::fixtures;

// The always-on property suites: color-swap antisymmetry, delta0 bounds,
// C4 monotonicity, and relabeling invariance across the corpus.

namespace {

std::vector<Graph> small_corpus() {
    return {fx::path(3),          fx::cycle(4),        fx::cycle(5),
            complete_graph(3),    complete_graph(4),   fx::k4_minus_edge(),
            fx::k222_minus_edge(), fx::p3_plus_k2(),   fx::star(3),
            fx::example4()};
}

} // namespace

TEST_CASE("color swap negates every discrepancy multiset") {
    Graph h = complete_graph(3);
    for (uint32_t mask = 0; mask < 8; ++mask) {
        Frame f = custom_frame(kr_coloring_from_mask(3, mask), "m");
        Blowup b = expand({f, {2, 2, 2}});
        DiscrepancySummary plus = discrepancy_multiset(h, b.colored, 100000);
        DiscrepancySummary minus = discrepancy_multiset(h, b.colored.swapped(), 100000);
        std::map<long, long> mirror;
        for (const auto& [d, c] : plus.values) mirror[-d] = c;
        CHECK(minus.values == mirror);
    }
}

TEST_CASE("template decisions are color-swap invariant") {
    for (const Graph& h : {complete_graph(3), fx::k4_minus_edge(), fx::k222_minus_edge()}) {
        for (int type = 1; type <= 3; ++type) {
            Frame f = butterfly(type);
            CHECK(is_template(f, h).is_template ==
                  is_template(custom_frame(f.colored.swapped(), "sw"), h).is_template);
        }
    }
}

TEST_CASE("delta0 is a rational in its admissible interval") {
    for (const Graph& g : small_corpus()) {
        int r = chromatic_number(g);
        if (r < 2) continue;
        Delta0Result d = delta0(g);
        CHECK(d.value >= 0);
        CHECK(d.value <= Rational(1) - Rational(1) / Rational(r));
    }
}

TEST_CASE("delta0 vanishes on every bipartite fixture") {
    for (const Graph& g : {fx::path(3), fx::cycle(4), fx::p3_plus_k2(), fx::star(3),
                           fx::cycle(6)}) {
        CHECK(chromatic_number(g) == 2);
        CHECK(delta0(g).value == 0);
    }
}

TEST_CASE("C4 monotonicity and universal failure at r+2") {
    for (const Graph& g : small_corpus()) {
        int r = chromatic_number(g);
        CHECK(!satisfies_c4(g, r + 2).holds);
        for (int k = std::max(4, r); k <= r + 2; ++k) {
            if (k >= 5 && satisfies_c4(g, k).holds) CHECK(satisfies_c4(g, k - 1).holds);
        }
    }
}

TEST_CASE("relabeling invariance of template decisions") {
    Graph h = fx::k222_minus_edge();
    auto perm = fx::random_permutation(h.n(), 31);
    Graph h2 = h.relabeled(perm);
    for (uint32_t mask = 0; mask < 8; ++mask) {
        Frame f = custom_frame(kr_coloring_from_mask(3, mask), "m");
        CHECK(is_template(f, h).is_template == is_template(f, h2).is_template);
    }
    CHECK(delta0(h).value == delta0(h2).value);
}

TEST_CASE("random frames: the program and the exhaustive search never contradict") {
    // A two-discrepancy blowup is a feasible pair of integral factor
    // vectors, so brute force finding one forces a positive optimum; a zero
    // optimum rules out such blowups at every scale. Both directions are
    // checked on random colored frames.
    std::mt19937 rng(20240813);
    std::vector<Graph> hosts{complete_graph(3), fx::path(3), fx::k4_minus_edge()};
    int templates_seen = 0, witnesses_seen = 0;
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) edges.emplace_back(u, v);
        Graph fg(n, edges);
        std::vector<int8_t> colors(fg.edges().size());
        for (auto& c : colors) c = rng() % 2 ? 1 : -1;
        Frame frame = custom_frame(ColoredGraph(fg, colors), "rand");

        const Graph& h = hosts[iter % hosts.size()];
        TemplateDecision lp = is_template(frame, h);
        BruteforceTemplateResult bf = bruteforce_is_template(frame, h, 16);
        if (lp.is_template) ++templates_seen;
        if (bf.found) {
            ++witnesses_seen;
            CHECK(lp.is_template);
        }
        if (!lp.is_template) CHECK(!bf.found);
    }
    CHECK(templates_seen > 0);
    CHECK(witnesses_seen > 0);
}

TEST_CASE("regular blowup identity at k = 5") {
    // blowup of a half-regular K_5: factors satisfy c(J) = (2d-k+1)/(k-1) e(J) = 0;
    // monochromatic: c(J) = e(J)
    Graph h = complete_graph(5);
    LowerBoundResult half =
        lower_bound_construction(h, LowerBoundCase::C4K1Mod4, 10, 5);
    REQUIRE(half.ok());
    DiscrepancySummary s = discrepancy_multiset(h, half.construction->colored_graph, 100000);
    CHECK(s.values.size() == 1);
    CHECK(s.values.count(0) == 1);

    Blowup mono = expand({mono_clique(5, +1), {2, 2, 2, 2, 2}});
    bool all_match = true;
    enumerate_perfect_factors(h, mono.colored, 100000, [&](const ExplicitFactor& f) {
        long edges = 0, disc = 0;
        for (const auto& copy : f.copies)
            for (const auto& [u, v] : h.edges()) {
                ++edges;
                disc += mono.colored.color_of(copy[u], copy[v]);
            }
        if (disc != edges) all_match = false;
        return true;
    });
    CHECK(all_match);
}
