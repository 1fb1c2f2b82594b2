#include <doctest.h>

#include "fixtures.hpp"
#include "hdisc/chromatic.hpp"
#include "hdisc/hstar.hpp"
#include "hdisc/oracle.hpp"
#include "hdisc/templates.hpp"

using namespace hdisc;
namespace fx = hdisc::fixtures;

namespace {

// The five construction guarantees, checked exactly on the built object.
void check_h_star(const Graph& h, const HStarResult& res, const Rational& eta) {
    if (res.trivial) {
        REQUIRE(res.h_star);
        CHECK(*res.h_star == h);
        return;
    }
    const int r = chromatic_number(h);
    const long n = res.total_size();

    // the plan tiles the parts with whole H-copies, one class per part
    std::vector<long> fill(r, 0);
    for (const HStarPlanBlock& block : res.factor_plan) {
        std::vector<long> size(r, 0);
        for (int c : block.coloring.assignment) ++size[c];
        for (const auto& [u, v] : h.edges())
            CHECK(block.part_of_class[block.coloring.assignment[u]] !=
                  block.part_of_class[block.coloring.assignment[v]]);
        for (int c = 0; c < r; ++c)
            fill[block.part_of_class[c]] += block.multiplicity * size[c];
    }
    for (int p = 0; p < r; ++p) CHECK(fill[p] == res.part_sizes[p]);

    // when the explicit graph exists, the factor must verify on it
    if (res.h_star) {
        REQUIRE(res.factor);
        long cross = 0;
        for (size_t i = 0; i < res.part_sizes.size(); ++i)
            for (size_t j = i + 1; j < res.part_sizes.size(); ++j)
                cross += res.part_sizes[i] * res.part_sizes[j];
        CHECK(res.h_star->edge_count() == cross);
        ColoredGraph host(*res.h_star, std::vector<int8_t>(res.h_star->edge_count(), 1));
        CHECK(verify_factor(h, host, *res.factor).valid);
    }

    // chi_cr sandwich; the parts are the unique coloring of a complete
    // multipartite graph, so sigma is the smallest part
    long smallest = *std::min_element(res.part_sizes.begin(), res.part_sizes.end());
    Rational chi_cr = Rational(r - 1) * Rational(n) / Rational(n - smallest);
    Rational value = Rational(1) - Rational(1) / chi_cr;
    CHECK(res.alpha <= value);
    CHECK(value <= res.alpha + eta / 4);

    // hcf(H*) = 1 whenever alpha + eta/4 < (r-1)/r
    if (res.alpha + eta / 4 < Rational(r - 1) / Rational(r)) {
        std::vector<long> sorted = res.part_sizes;
        std::sort(sorted.begin(), sorted.end());
        long g = 0;
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            g = std::gcd(g, sorted[i + 1] - sorted[i]);
        CHECK(g == 1);
    }

    // min degree beats delta0 whenever delta0 < 1 - 1/r
    Delta0Result d0 = delta0(h);
    if (d0.value < Rational(1) - Rational(1) / Rational(r)) {
        long largest = *std::max_element(res.part_sizes.begin(), res.part_sizes.end());
        CHECK(Rational(n - largest) / Rational(n) > d0.value);
    }
}

} // namespace

TEST_CASE("bipartite H is its own auxiliary graph") {
    HStarResult res = build_h_star(fx::path(3), rat(1, 10));
    CHECK(res.trivial);
    check_h_star(fx::path(3), res, rat(1, 10));
}

TEST_CASE("the triangle takes the balanced shortcut") {
    HStarResult res = build_h_star(complete_graph(3), rat(1, 10));
    CHECK(!res.trivial);
    CHECK(res.shortcut_balanced);
    CHECK(res.part_sizes == std::vector<long>{3, 3, 3});
    CHECK(res.alpha == rat(2, 3));
    check_h_star(complete_graph(3), res, rat(1, 10));
}

TEST_CASE("K4 minus an edge runs the full construction") {
    Graph h = fx::k4_minus_edge();
    Rational eta = rat(1, 10);
    HStarResult res = build_h_star(h, eta);
    CHECK(!res.trivial);
    CHECK(!res.shortcut_balanced);
    CHECK(res.alpha == rat(5, 8));
    CHECK(res.beta == rat(4, 11));
    CHECK(res.k == 1);
    CHECK(res.ell == 4);
    REQUIRE(res.h_star); // 180 vertices, materialized
    check_h_star(h, res, eta);
}

TEST_CASE("other etas still satisfy every bullet") {
    Graph h = fx::k4_minus_edge();
    for (const Rational& eta : {rat(1, 4), rat(1, 20), rat(3, 100)}) {
        HStarResult res = build_h_star(h, eta);
        check_h_star(h, res, eta);
    }
}

TEST_CASE("worked example two gets a plan-level construction") {
    Graph h = fx::example2();
    Rational eta = rat(1, 10);
    HStarResult res = build_h_star(h, eta);
    CHECK(res.alpha == rat(5, 8)); // delta0 dominates 1 - 41/92
    CHECK(!res.h_star);            // far beyond desk scale; plan only
    check_h_star(h, res, eta);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_h_star(fx::k4_minus_edge(), rat(0)), ContractViolation);
    CHECK_THROWS_AS(build_h_star(fx::k4_minus_edge(), rat(2)), ContractViolation);
}
