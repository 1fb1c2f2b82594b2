#pragma once

#include <vector>

#include "hdisc/rational.hpp"

namespace hdisc {

enum class LpSense { Maximize, Minimize };

// Equality-form program: rows * x = rhs, x >= 0.
struct LpProblem {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    LpSense sense = LpSense::Maximize;
};

struct LpOutcome {
    enum class Kind { Optimal, Infeasible, Unbounded };
    Kind kind = Kind::Infeasible;
    Rational value;               // set when Optimal
    std::vector<Rational> point;  // set when Optimal; a basic feasible solution

    bool optimal() const { return kind == Kind::Optimal; }
    bool infeasible() const { return kind == Kind::Infeasible; }
    bool unbounded() const { return kind == Kind::Unbounded; }
};

// Two-phase simplex with Bland's anti-cycling pivot rule over exact
// rationals. Deterministic for a fixed input.
LpOutcome solve_lp(const LpProblem& p);

// Convenience layer that lowers <= / >= rows to equalities with slack
// variables appended after the structural variables.
class LpBuilder {
public:
    explicit LpBuilder(int num_vars) : n_(num_vars), objective_(num_vars, 0) {}

    void set_objective(int var, const Rational& coeff) { objective_[var] = coeff; }
    void set_sense(LpSense s) { sense_ = s; }

    void add_eq(std::vector<Rational> row, Rational rhs);
    // row * x <= rhs and row * x >= rhs
    void add_le(std::vector<Rational> row, Rational rhs);
    void add_ge(std::vector<Rational> row, Rational rhs);

    // Structural variable count (excludes slacks).
    int num_vars() const { return n_; }

    LpProblem build() const;

    // Truncates the solution point to the structural variables.
    static std::vector<Rational> structural(const std::vector<Rational>& point, int n) {
        return std::vector<Rational>(point.begin(), point.begin() + n);
    }

private:
    int n_;
    int slacks_ = 0;
    LpSense sense_ = LpSense::Maximize;
    std::vector<Rational> objective_;
    struct Row { std::vector<Rational> coeffs; Rational rhs; int slack_sign; };
    std::vector<Row> rows_;
};

} // namespace hdisc
