#pragma once

#include <array>
#include <optional>

#include "hdisc/coloring.hpp"
#include "hdisc/graph.hpp"
#include "hdisc/linalg.hpp"

namespace hdisc {

struct C4Report {
    int k = 0;
    bool holds = false;
    // Present iff holds is false: a coloring and an index quadruple with
    // e(A_i,A_j) + e(A_k,A_l) != e(A_i,A_k) + e(A_j,A_l).
    std::optional<std::pair<LabeledColoring, std::array<int, 4>>> counterexample;
};

// Whether every proper k-coloring of h (empty classes allowed) satisfies
// the four-class edge-count identity for every quadruple of classes.
// Stops at the first violation.
C4Report satisfies_c4(const Graph& h, int k);

struct UniformReport {
    bool uniform = false;
    std::optional<std::pair<LabeledColoring, std::array<int, 2>>> counterexample;
};

// Every r-coloring has all cross-class counts equal to e(h)/C(r,2).
UniformReport is_uniform(const Graph& h);

// Solution space of {rho(a_i+a_j) = s*X_ij + t*e_ij : all r-colorings f,
// all pairs i<j} as a rational basis of (s,t,rho) triples.
struct StructuredSolution {
    std::vector<std::vector<Rational>> basis;

    bool contains(const Rational& s, const Rational& t, const Rational& rho) const {
        return in_span(basis, {s, t, rho});
    }
    // rho making h (s,t)-structured, if any.
    std::optional<Rational> rho_for(const Rational& s, const Rational& t) const;
};

StructuredSolution structured_space(const Graph& h);

// Whether some nonnegative, not-all-zero weighting of r-colorings has
// equal class-size marginals (a balanced fractional factor) and yet a
// cross-class edge total different from e(h)/C(r,2) for some pair.
// Certificate: integer-scaled weights per labeled coloring.
struct BalancedUniformReport {
    bool exists_nonbalanced = false;
    std::vector<std::pair<LabeledColoring, BigInt>> certificate;
};

BalancedUniformReport exists_nonbalanced_uniform_factor(const Graph& h);

} // namespace hdisc
