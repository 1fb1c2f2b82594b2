#include "hdisc/lp.hpp"

#include "hdisc/errors.hpp"

namespace hdisc {

namespace {

// Dense simplex tableau over rationals.
//
// Layout: columns 0..n-1 are the problem variables (artificials included
// at the end during phase 1), column n is the right-hand side. One extra
// row holds the reduced costs of the active objective.
struct Tableau {
    int m, n;
    std::vector<std::vector<Rational>> a; // m rows of n+1
    std::vector<Rational> cost;           // n reduced costs + objective constant
    std::vector<int> basis;               // basic variable of each row

    Tableau(int m_, int n_) : m(m_), n(n_), a(m_, std::vector<Rational>(n_ + 1, 0)),
                              cost(n_ + 1, 0), basis(m_, -1) {}

    void pivot(int row, int col) {
        Rational inv = 1 / a[row][col];
        for (int j = 0; j <= n; ++j) a[row][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = 0; j <= n; ++j) a[i][j] -= f * a[row][j];
        }
        if (cost[col] != 0) {
            Rational f = cost[col];
            for (int j = 0; j <= n; ++j) cost[j] -= f * a[row][j];
        }
        basis[row] = col;
    }

    // Bland: entering variable is the lowest-index column with positive
    // reduced cost; leaving row minimizes the ratio, ties by lowest basic
    // variable index. Returns false on unboundedness.
    bool iterate(int usable_cols, bool& unbounded) {
        unbounded = false;
        for (;;) {
            int col = -1;
            for (int j = 0; j < usable_cols; ++j) {
                if (cost[j] > 0) { col = j; break; }
            }
            if (col < 0) return true;
            int row = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][col] <= 0) continue;
                Rational ratio = a[i][n] / a[i][col];
                if (row < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[row])) {
                    row = i;
                    best = ratio;
                }
            }
            if (row < 0) { unbounded = true; return false; }
            pivot(row, col);
        }
    }
};

} // namespace

LpOutcome solve_lp(const LpProblem& p) {
    const int n = p.num_vars;
    const int m = static_cast<int>(p.rows.size());
    if (static_cast<int>(p.objective.size()) != n)
        throw ContractViolation("solve_lp: objective length != num_vars");
    if (p.rhs.size() != p.rows.size())
        throw ContractViolation("solve_lp: rhs length != row count");
    for (const auto& r : p.rows)
        if (static_cast<int>(r.size()) != n)
            throw ContractViolation("solve_lp: row length != num_vars");

    // Phase 1: artificial variable per row, maximize -(sum of artificials).
    Tableau t(m, n + m);
    for (int i = 0; i < m; ++i) {
        bool neg = p.rhs[i] < 0;
        for (int j = 0; j < n; ++j) t.a[i][j] = neg ? -p.rows[i][j] : p.rows[i][j];
        t.a[i][t.n] = neg ? -p.rhs[i] : p.rhs[i];
        t.a[i][n + i] = 1;
        t.basis[i] = n + i;
    }
    // Objective row convention: cost[0..n-1] are reduced costs and cost[n]
    // holds the negated objective value, so a pivot updates every entry
    // uniformly. Phase 1 maximizes -sum(artificials), currently -sum(rhs).
    for (int j = 0; j < n; ++j) {
        Rational colsum = 0;
        for (int i = 0; i < m; ++i) colsum += t.a[i][j];
        t.cost[j] = colsum;
    }
    {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += t.a[i][t.n];
        t.cost[t.n] = s;
    }
    bool unbounded = false;
    t.iterate(n, unbounded); // artificial columns never re-enter
    if (t.cost[t.n] != 0) {
        LpOutcome out;
        out.kind = LpOutcome::Kind::Infeasible;
        return out;
    }

    // Drive basic artificials out; a row with no structural coefficient is
    // redundant and can be ignored (its rhs is zero at this point).
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (t.a[i][j] != 0) { col = j; break; }
        if (col >= 0) t.pivot(i, col);
    }

    // Phase 2: true objective in terms of the current basis.
    const Rational sign = p.sense == LpSense::Maximize ? 1 : -1;
    for (int j = 0; j <= t.n; ++j) t.cost[j] = 0;
    for (int j = 0; j < n; ++j) t.cost[j] = sign * p.objective[j];
    for (int i = 0; i < m; ++i) {
        int b = t.basis[i];
        if (b >= n || t.cost[b] == 0) continue;
        Rational f = t.cost[b];
        for (int j = 0; j <= t.n; ++j) t.cost[j] -= f * t.a[i][j];
    }
    // Keep lingering artificial basics (always at value 0) from pivoting back in.
    if (!t.iterate(n, unbounded)) {
        LpOutcome out;
        out.kind = LpOutcome::Kind::Unbounded;
        return out;
    }

    LpOutcome out;
    out.kind = LpOutcome::Kind::Optimal;
    out.point.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) out.point[t.basis[i]] = t.a[i][t.n];
    out.value = 0;
    for (int j = 0; j < n; ++j) out.value += p.objective[j] * out.point[j];
    return out;
}

void LpBuilder::add_eq(std::vector<Rational> row, Rational rhs) {
    if (static_cast<int>(row.size()) != n_) throw ContractViolation("LpBuilder: bad row length");
    rows_.push_back({std::move(row), std::move(rhs), 0});
}

void LpBuilder::add_le(std::vector<Rational> row, Rational rhs) {
    if (static_cast<int>(row.size()) != n_) throw ContractViolation("LpBuilder: bad row length");
    rows_.push_back({std::move(row), std::move(rhs), +1});
    ++slacks_;
}

void LpBuilder::add_ge(std::vector<Rational> row, Rational rhs) {
    if (static_cast<int>(row.size()) != n_) throw ContractViolation("LpBuilder: bad row length");
    rows_.push_back({std::move(row), std::move(rhs), -1});
    ++slacks_;
}

LpProblem LpBuilder::build() const {
    LpProblem p;
    p.num_vars = n_ + slacks_;
    p.sense = sense_;
    p.objective = objective_;
    p.objective.resize(p.num_vars, 0);
    int next_slack = n_;
    for (const Row& r : rows_) {
        std::vector<Rational> row = r.coeffs;
        row.resize(p.num_vars, 0);
        if (r.slack_sign != 0) row[next_slack++] = r.slack_sign;
        p.rows.push_back(std::move(row));
        p.rhs.push_back(r.rhs);
    }
    return p;
}

} // namespace hdisc
