#include <doctest.h>

#include "fixtures.hpp"
#include "hdisc/oracle.hpp"
#include "hdisc/witness.hpp"

using namespace hdisc;
namespace fx = hdisc::fixtures;

namespace {

void check_witness(const Graph& h, const WitnessResult& res, long expected_diff) {
    REQUIRE(res.ok());
    const TemplateWitness& w = *res.witness;
    Blowup b = expand(w.spec);
    FactorCheck a = verify_factor(h, b.colored, w.factor_a);
    FactorCheck bb = verify_factor(h, b.colored, w.factor_b);
    REQUIRE(a.valid);
    REQUIRE(bb.valid);
    CHECK(a.discrepancy == w.disc_a);
    CHECK(bb.discrepancy == w.disc_b);
    CHECK(a.discrepancy - bb.discrepancy == w.expected_difference);
    if (expected_diff != 0) CHECK(w.expected_difference == expected_diff);
    CHECK(w.disc_a != w.disc_b);
}

} // namespace

TEST_CASE("blowup expansion") {
    SUBCASE("monochromatic edge") {
        Blowup b = expand({mono_clique(2, +1), {2, 2}});
        CHECK(b.colored.graph.n() == 4);
        CHECK(b.colored.graph.edge_count() == 4);
        CHECK(b.colored.discrepancy() == 4);
    }
    SUBCASE("star triangle") {
        Blowup b = expand({star_clique(3, +1), {2, 2, 2}});
        CHECK(b.colored.graph.edge_count() == 12);
        CHECK(b.colored.discrepancy() == 8 - 4);
    }
    SUBCASE("butterfly with a heavy shared cluster") {
        Blowup b = expand({butterfly(1), {3, 1, 1, 1, 1}});
        CHECK(b.colored.graph.n() == 7);
        int mindeg = b.colored.graph.n();
        for (int v = 0; v < b.colored.graph.n(); ++v)
            mindeg = std::min(mindeg, b.colored.graph.degree(v));
        CHECK(mindeg == 4);
    }
    SUBCASE("zero-size clusters are skipped") {
        Blowup b = expand({star_clique(3, +1), {2, 0, 2}});
        CHECK(b.colored.graph.n() == 4);
        CHECK(b.colored.graph.edge_count() == 4);
    }
}

TEST_CASE("balanced blowup factor") {
    SUBCASE("triangle") {
        Graph h = complete_graph(3);
        BalancedBlowupFactor f = balanced_blowup_factor(h);
        CHECK(f.spec.sizes == std::vector<long>{6, 6, 6});
        CHECK(f.factor.copies.size() == 6);
        Blowup b = expand(f.spec);
        FactorCheck check = verify_factor(h, b.colored, f.factor);
        CHECK(check.valid);
        CHECK(check.discrepancy == 18); // +monochromatic host: 6 copies of 3 edges
        // pairwise cluster counts: 2 (r-2)! e(H) = 6
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                long count = 0;
                for (const auto& copy : f.factor.copies)
                    for (const auto& [u, v] : h.edges()) {
                        int fu = b.frame_vertex_of[copy[u]], fv = b.frame_vertex_of[copy[v]];
                        if ((fu == i && fv == j) || (fu == j && fv == i)) ++count;
                    }
                CHECK(count == 6);
            }
    }
    SUBCASE("K4 minus an edge") {
        Graph h = fx::k4_minus_edge();
        BalancedBlowupFactor f = balanced_blowup_factor(h);
        CHECK(f.spec.sizes == std::vector<long>{8, 8, 8});
        CHECK(f.factor.copies.size() == 6);
        Blowup b = expand(f.spec);
        CHECK(verify_factor(h, b.colored, f.factor).valid);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                long count = 0;
                for (const auto& copy : f.factor.copies)
                    for (const auto& [u, v] : h.edges()) {
                        int fu = b.frame_vertex_of[copy[u]], fv = b.frame_vertex_of[copy[v]];
                        if ((fu == i && fv == j) || (fu == j && fv == i)) ++count;
                    }
                CHECK(count == 10); // 2 (r-2)! e(H)
            }
    }
    SUBCASE("path at r = 2 puts every edge across the single pair") {
        Graph h = fx::path(3);
        BalancedBlowupFactor f = balanced_blowup_factor(h);
        CHECK(f.spec.sizes == std::vector<long>{3, 3});
        CHECK(f.factor.copies.size() == 2);
        Blowup b = expand(f.spec);
        FactorCheck check = verify_factor(h, b.colored, f.factor);
        CHECK(check.valid);
        CHECK(check.discrepancy == 4); // e(F) = 2 e(H), all between the two clusters
    }
}

TEST_CASE("witness recipe: disconnected bipartite components") {
    Graph h = fx::p3_plus_k2();
    WitnessResult res = template_witness(WitnessRecipe::BipartiteComponents, h,
                                         edge_pair(+1, -1));
    check_witness(h, res, 2 * (16 - 12));
    // the recipe's exact blowup sizes: 2|U||W| twice, then 2|U||H| + 2|W|(|H|-|U|)
    CHECK(res.witness->spec.sizes == std::vector<long>{12, 12, 38, 38});

    SUBCASE("refusals") {
        CHECK(!template_witness(WitnessRecipe::BipartiteComponents, fx::path(3),
                                edge_pair(+1, -1)).ok());
        CHECK(!template_witness(WitnessRecipe::BipartiteComponents, h, edge_pair(+1, +1)).ok());
        CHECK(!template_witness(WitnessRecipe::BipartiteComponents,
                                fx::disjoint_union(fx::path(3), fx::path(3)),
                                edge_pair(+1, -1)).ok());
    }
}

TEST_CASE("witness recipe: r-cliques sharing all but one vertex") {
    // frame: edges s-q and t-q of opposite colors (r = 2)
    Graph h = fx::path(3);
    Frame f = clique_pair(2, 1, {static_cast<int8_t>(+1), static_cast<int8_t>(-1)});
    WitnessResult res = template_witness(WitnessRecipe::SharedRm1, h, f);
    REQUIRE(res.ok());
    check_witness(h, res, 0);
    CHECK(std::abs(res.witness->expected_difference) == 2);
    long total = 0;
    for (long s : res.witness->spec.sizes) total += s;
    CHECK(total == 6);

    SUBCASE("r = 3 non-regular host") {
        Graph h2 = fx::k4_minus_edge();
        // two triangles sharing an edge, one +heavy and one -heavy
        Frame f2 = clique_pair(3, 2, {1, 1, 1, -1, -1}); // edge colors in sorted order
        WitnessResult r2 = template_witness(WitnessRecipe::SharedRm1, h2, f2);
        REQUIRE(r2.ok());
        check_witness(h2, r2, 0);
    }
    SUBCASE("regular H refuses") {
        CHECK(!template_witness(WitnessRecipe::SharedRm1, fx::cycle(4), f).ok());
    }
}

TEST_CASE("witness recipe: different degrees into two classes") {
    Graph h = fx::k4_minus_edge();
    // triangles {x,z,w} and {y,z,w}: c(xz)=+1, c(xw)=-1, c(yz)=-1, c(yw)=+1, c(zw)=+1
    // positional clique_pair(3,2): vertices x=0, shared z=1,w=2, y=3
    // sorted edges: (0,1) (0,2) (1,2) (1,3) (2,3)
    Frame f = clique_pair(3, 2, {1, -1, 1, -1, 1});
    WitnessResult res = template_witness(WitnessRecipe::DegreeToParts, h, f);
    REQUIRE(res.ok());
    check_witness(h, res, 0);
    CHECK(std::abs(res.witness->expected_difference) == 4);

    SUBCASE("equal degrees everywhere refuses") {
        CHECK(!template_witness(WitnessRecipe::DegreeToParts, complete_graph(3), f).ok());
    }
}

TEST_CASE("witness recipe: regular pair") {
    Graph h = fx::example4();
    // L1 = {0,1,2,3} all positive (3-regular), L2 = {2,3,4,5} with positive
    // part {23, 45} (1-regular); the shared edge 23 is consistent.
    Graph shape = clique_pair_graph(4, 2);
    std::vector<int8_t> colors(shape.edges().size(), -1);
    for (size_t e = 0; e < shape.edges().size(); ++e) {
        auto [u, v] = shape.edges()[e];
        if (v <= 3) colors[e] = 1; // inside L1
    }
    colors[shape.edge_index(4, 5)] = 1;
    WitnessResult res = template_witness(WitnessRecipe::RegularPair, h,
                                         clique_pair(4, 2, colors));
    REQUIRE(res.ok());
    // 4 (d-d') (|A_3|+|A_4|-|A_1|-|A_2|) e(H)/(r-1) = 4*2*1*27/3
    CHECK(std::abs(res.witness->expected_difference) == 72);
    check_witness(h, res, 0);

    SUBCASE("balanced-only H refuses") {
        CHECK(!template_witness(WitnessRecipe::RegularPair, complete_graph(4),
                                clique_pair(4, 2, colors)).ok());
    }
}

TEST_CASE("witness recipe: parity-violating shared pair") {
    Graph h = fx::example4();
    Graph shape = clique_pair_graph(4, 2);
    // V = {2,3}; e1 = (0,1), e2 = (4,5). Want q = c(S) - c(T) not in
    // {0,+-4,+-8}: set c(02)=c(03)=c(12)=+1, c(13)=-1 (c(S)=2) and
    // T-edges all -1 (c(T)=-4), so q = 6.
    std::vector<int8_t> colors(shape.edges().size(), -1);
    auto set = [&](int u, int v, int c) {
        colors[shape.edge_index(u, v)] = static_cast<int8_t>(c);
    };
    set(0, 1, 1);
    set(0, 2, 1);
    set(0, 3, 1);
    set(1, 2, 1);
    set(1, 3, -1);
    WitnessResult res = template_witness(WitnessRecipe::SharedRm2Parity, h,
                                         clique_pair(4, 2, colors));
    REQUIRE(res.ok());
    check_witness(h, res, 0);
    CHECK(std::abs(res.witness->expected_difference) == 2 * 3);

    SUBCASE("uniform H refuses") {
        CHECK(!template_witness(WitnessRecipe::SharedRm2Parity, complete_graph(4),
                                clique_pair(4, 2, colors)).ok());
    }

    SUBCASE("the two cliques may share all but one vertex") {
        // K_4's {0,1,2,3} and {1,2,3,4}: V = {1,2}, shared edge pair at 3
        Graph shape2 = clique_pair_graph(4, 3);
        std::vector<int8_t> c2(shape2.edges().size(), 1);
        auto set2 = [&](int u, int v, int c) {
            c2[shape2.edge_index(u, v)] = static_cast<int8_t>(c);
        };
        // q = c(01)+c(02)-c(41)-c(42) = 2, g(1) = 0 != g(2) = 2
        set2(2, 4, -1);
        WitnessResult merged = template_witness(WitnessRecipe::SharedRm2Parity, h,
                                                clique_pair(4, 3, c2));
        REQUIRE(merged.ok());
        check_witness(h, merged, 0);
    }
}

TEST_CASE("witness recipe: structured pair at r = 4") {
    // example 4 is (1,2)-structured with rho = 6; a frame whose parameters
    // normalize to (1, 4/3) misses that direction and yields a witness
    Graph h = fx::example4();
    Graph shape = clique_pair_graph(4, 2);
    std::vector<int8_t> colors(shape.edges().size(), -1);
    auto set = [&](int u, int v, int c) {
        colors[shape.edge_index(u, v)] = static_cast<int8_t>(c);
    };
    set(0, 1, 1);
    set(0, 2, 1);
    set(0, 3, 1);
    set(1, 2, 1);
    set(1, 3, -1);
    WitnessResult res =
        template_witness(WitnessRecipe::StructuredPair, h, clique_pair(4, 2, colors));
    REQUIRE(res.ok());
    check_witness(h, res, 0);

    SUBCASE("a frame matching the structured direction refuses") {
        // s = t = 0 is degenerate; build one with (s,t) proportional to (1,2):
        // q = 2(r-2) s = 4 and c(e1)-c(e2) = 2 gives exactly (1,2)
        std::vector<int8_t> c2(shape.edges().size(), -1);
        auto set2 = [&](int u, int v, int c) {
            c2[shape.edge_index(u, v)] = static_cast<int8_t>(c);
        };
        set2(0, 1, 1); // e1 = +1, e2 = -1 so t = 2
        // q = c(S) - c(T) with S = {0,1}x{2,3}, T = {4,5}x{2,3}: make c(S) = 0, c(T) = -4
        set2(0, 2, 1);
        set2(0, 3, -1);
        set2(1, 2, 1);
        set2(1, 3, -1);
        WitnessResult deg = template_witness(WitnessRecipe::StructuredPair, h,
                                             clique_pair(4, 2, c2));
        CHECK(!deg.ok());
        CHECK(deg.refusal.find("structured") != std::string::npos);
    }
}

TEST_CASE("witness recipe: non-mono non-star clique against a C4 violation") {
    Graph h = fx::k4_minus_edge();
    // K_4 with exactly one positive edge: neither monochromatic nor a star
    Graph k4 = complete_graph(4);
    std::vector<int8_t> colors(6, -1);
    colors[k4.edge_index(0, 1)] = 1;
    Frame f = custom_frame(ColoredGraph(k4, colors), "one-plus");
    WitnessResult res = template_witness(WitnessRecipe::NonMonoNonStarC4, h, f);
    REQUIRE(res.ok());
    check_witness(h, res, 0);

    SUBCASE("k = 3 frames refuse") {
        CHECK(!template_witness(WitnessRecipe::NonMonoNonStarC4, h,
                                star_clique(3, +1)).ok());
    }
    SUBCASE("star frames refuse") {
        CHECK(!template_witness(WitnessRecipe::NonMonoNonStarC4, h,
                                star_clique(4, +1)).ok());
    }
    SUBCASE("graphs satisfying the condition refuse") {
        CHECK(!template_witness(WitnessRecipe::NonMonoNonStarC4, fx::example4(), f).ok());
    }
}

TEST_CASE("witness recipe: structured pair on butterflies") {
    // K4 minus an edge is (1,6)-structured only, so every butterfly type
    // yields a witness through the r = 3 shared pair
    Graph h = fx::k4_minus_edge();
    for (int type : {1, 2, 3}) {
        WitnessResult res = template_witness(WitnessRecipe::StructuredPair, h, butterfly(type));
        REQUIRE(res.ok());
        check_witness(h, res, 0);
    }
    SUBCASE("the third worked example refuses on its own butterfly") {
        // (1,-1)-structured: the shared-head star butterfly is exactly the
        // degenerate direction
        WitnessResult res =
            template_witness(WitnessRecipe::StructuredPair, fx::example3(), butterfly(2));
        CHECK(!res.ok());
        CHECK(res.refusal.find("structured") != std::string::npos);
    }
}

TEST_CASE("lower bound constructions") {
    SUBCASE("regular 3/4 host for the triangle") {
        LowerBoundResult res =
            lower_bound_construction(complete_graph(3), LowerBoundCase::Regular34, 12);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(3, 4));
        CHECK(res.construction->colored_graph.graph.n() == 12);
        CHECK(res.construction->claim == FactorClaim::AllFactorsZero);
        CHECK(!lower_bound_construction(complete_graph(3), LowerBoundCase::Regular34, 10).ok());
        CHECK(!lower_bound_construction(fx::path(3), LowerBoundCase::Regular34, 12).ok());
    }
    SUBCASE("component density host") {
        Graph h = fx::disjoint_union(fx::path(3), fx::path(3));
        LowerBoundResult res =
            lower_bound_construction(h, LowerBoundCase::ComponentDensity, 6);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(2, 6));
        DiscrepancySummary s =
            discrepancy_multiset(h, res.construction->colored_graph, 100000);
        CHECK(s.factor_count > 0);
        CHECK(s.values.size() == 1);
        CHECK(s.values.count(0) == 1);
    }
    SUBCASE("butterfly host for the third worked example") {
        LowerBoundResult res =
            lower_bound_construction(fx::example3(), LowerBoundCase::Butterfly, 7 * 46);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(4, 7));
        CHECK(!lower_bound_construction(fx::example1(), LowerBoundCase::Butterfly, 7 * 121).ok());
    }
    SUBCASE("half-regular K_5 host") {
        LowerBoundResult res =
            lower_bound_construction(complete_graph(5), LowerBoundCase::C4K1Mod4, 10, 5);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(4, 5));
        DiscrepancySummary s =
            discrepancy_multiset(complete_graph(5), res.construction->colored_graph, 100000);
        CHECK(s.factor_count == 16);
        CHECK(s.values.size() == 1);
        CHECK(s.values.count(0) == 1);
    }
    SUBCASE("recolored K_4 host for K4 itself") {
        LowerBoundResult res =
            lower_bound_construction(complete_graph(4), LowerBoundCase::C4Regular, 16, 4);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(3, 4));
        DiscrepancySummary s =
            discrepancy_multiset(complete_graph(4), res.construction->colored_graph, 2000000);
        CHECK(s.factor_count > 0);
        CHECK(s.values.size() == 1);
        CHECK(s.values.count(0) == 1);
    }
    SUBCASE("star triangle host for the second worked example") {
        LowerBoundResult res =
            lower_bound_construction(fx::example2(), LowerBoundCase::StructuredR3, 23);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(5, 8));
        CHECK(!lower_bound_construction(fx::k4_minus_edge(),
                                        LowerBoundCase::StructuredR3, 2).ok());
    }
    SUBCASE("skew K_6 host") {
        // K_6 is (0,1)-structured: singleton classes give 2 rho = 8 s + t
        LowerBoundResult res =
            lower_bound_construction(complete_graph(6), LowerBoundCase::StructuredGeneral, 84);
        REQUIRE(res.ok());
        CHECK(res.construction->min_degree_ratio == rat(84 - 15, 84));
        CHECK(res.construction->min_degree_ratio >= rat(3 * 6 - 5, 3 * 6 - 2));
        CHECK(res.construction->colored_graph.graph.n() == 84);
        LowerBoundResult bad =
            lower_bound_construction(complete_graph(6), LowerBoundCase::StructuredGeneral, 30);
        CHECK(!bad.ok());
    }
}
