#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "hdisc/blowup.hpp"
#include "hdisc/graph.hpp"

namespace hdisc {

struct DiscrepancySummary {
    std::map<long, long> values; // discrepancy -> number of factors
    long factor_count = 0;
    bool truncated = false; // enumeration budget hit; results are partial
};

// Distinct copies of h in the host (subgraphs isomorphic to h, i.e.
// embeddings deduplicated modulo automorphisms of h).
std::vector<std::vector<int>> enumerate_copies(const Graph& h, const Graph& host);

// Exact-cover backtracking over copies, branching on the most constrained
// uncovered vertex. Yields every perfect factor once, up to copy order.
// Budget counts search nodes; hitting it sets the truncated flag.
struct FactorEnumeration {
    long nodes = 0;
    bool truncated = false;
};

FactorEnumeration enumerate_perfect_factors(
    const Graph& h, const ColoredGraph& host, long budget,
    const std::function<bool(const ExplicitFactor&)>& visit);

DiscrepancySummary discrepancy_multiset(const Graph& h, const ColoredGraph& host, long budget);

// Exhaustive templatehood search over blowups of the frame with total size
// at most max_total (and divisible by |H|). For blowup hosts, perfect
// factors correspond exactly to integer combinations of embedding types
// meeting the cluster budgets, so the search enumerates those combinations.
struct BruteforceTemplateResult {
    bool found = false;
    std::vector<long> sizes; // witness blowup when found
    long disc_a = 0, disc_b = 0;
    ExplicitFactor factor_a, factor_b;
};

BruteforceTemplateResult bruteforce_is_template(const Frame& frame, const Graph& h,
                                                long max_total);

// Exact discrepancy profile of one blowup: every achievable factor
// discrepancy with the number of copy-type compositions realizing it.
// Empty map means the blowup has no perfect factor.
std::map<long, long> blowup_discrepancy_profile(const Frame& frame, const Graph& h,
                                                const std::vector<long>& sizes);

struct FactorCheck {
    bool valid = false;
    long discrepancy = 0;
    std::string reason; // set when invalid
};

FactorCheck verify_factor(const Graph& h, const ColoredGraph& host, const ExplicitFactor& f);

} // namespace hdisc
