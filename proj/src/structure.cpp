#include "hdisc/structure.hpp"

#include <map>
#include <set>

#include "hdisc/errors.hpp"
#include "hdisc/lp.hpp"

namespace hdisc {

C4Report satisfies_c4(const Graph& h, int k) {
    if (k < 4) throw ContractViolation("satisfies_c4: k < 4");
    C4Report rep;
    rep.k = k;
    rep.holds = true;
    for_each_coloring(h, k, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        // Unordered pairings {{i,j},{k,l}} of each 4-subset; the identity
        // is symmetric under swapping inside a pair.
        for (int i = 0; i < k && rep.holds; ++i)
            for (int j = i + 1; j < k && rep.holds; ++j)
                for (int l = j + 1; l < k && rep.holds; ++l)
                    for (int m = l + 1; m < k && rep.holds; ++m) {
                        const int q[4] = {i, j, l, m};
                        // pairings: (01|23), (02|13), (03|12)
                        long s01 = st.e[q[0]][q[1]] + st.e[q[2]][q[3]];
                        long s02 = st.e[q[0]][q[2]] + st.e[q[1]][q[3]];
                        long s03 = st.e[q[0]][q[3]] + st.e[q[1]][q[2]];
                        if (s01 != s02) {
                            rep.holds = false;
                            rep.counterexample = {f, {q[0], q[1], q[2], q[3]}};
                        } else if (s01 != s03) {
                            rep.holds = false;
                            rep.counterexample = {f, {q[0], q[1], q[3], q[2]}};
                        }
                    }
        return rep.holds;
    });
    return rep;
}

UniformReport is_uniform(const Graph& h) {
    UniformReport rep;
    rep.uniform = true;
    int r = chromatic_number(h);
    if (r < 2) { rep.uniform = true; return rep; }
    Rational target = Rational(2 * h.edge_count()) / Rational(static_cast<long>(r) * (r - 1));
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (Rational(st.e[i][j]) != target) {
                    rep.uniform = false;
                    rep.counterexample = {f, {i, j}};
                    return false;
                }
        return true;
    });
    return rep;
}

std::optional<Rational> StructuredSolution::rho_for(const Rational& s, const Rational& t) const {
    // Find coefficients c with sum c_i (s_i, t_i) = (s, t) over the basis;
    // any solution yields rho = sum c_i rho_i since the space is a span.
    size_t nb = basis.size();
    Matrix head(2, std::vector<Rational>(nb + 1, 0));
    for (size_t i = 0; i < nb; ++i) {
        head[0][i] = basis[i][0];
        head[1][i] = basis[i][1];
    }
    head[0][nb] = s;
    head[1][nb] = t;
    std::vector<int> piv = rref(head);
    // back-substitute a particular solution with free coefficients zero
    std::vector<Rational> coeff(nb, 0);
    for (size_t row = 0; row < piv.size(); ++row) {
        int c = piv[row];
        if (c == static_cast<int>(nb)) return std::nullopt; // inconsistent
        coeff[c] = head[row][nb];
    }
    // verify (s,t) actually reached (handles rank deficiencies)
    Rational cs = 0, ct = 0, crho = 0;
    for (size_t i = 0; i < nb; ++i) {
        cs += coeff[i] * basis[i][0];
        ct += coeff[i] * basis[i][1];
        crho += coeff[i] * basis[i][2];
    }
    if (cs != s || ct != t) return std::nullopt;
    return crho;
}

StructuredSolution structured_space(const Graph& h) {
    int r = chromatic_number(h);
    if (r < 2) throw ContractViolation("structured_space: chromatic number < 2");
    std::set<std::array<long, 3>> rows; // (X_ij, e_ij, a_i + a_j)
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                rows.insert({st.x[i][j], st.e[i][j], st.a[i] + st.a[j]});
        return true;
    });
    Matrix m;
    for (const auto& [x, e, a] : rows)
        m.push_back({Rational(x), Rational(e), Rational(-a)});
    StructuredSolution sol;
    sol.basis = kernel_basis(m);
    return sol;
}

BalancedUniformReport exists_nonbalanced_uniform_factor(const Graph& h) {
    int r = chromatic_number(h);
    if (r < 2) throw ContractViolation("exists_nonbalanced_uniform_factor: r < 2");
    BalancedUniformReport rep;

    // Fold labeled colorings by (class sizes, cross-class counts).
    struct Column {
        std::vector<long> a;
        std::vector<std::vector<long>> e;
        LabeledColoring rep;
    };
    std::map<std::pair<std::vector<long>, std::vector<std::vector<long>>>, size_t> index;
    std::vector<Column> cols;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        ColoringStats st = coloring_stats(h, f);
        auto key = std::make_pair(st.a, st.e);
        if (index.find(key) == index.end()) {
            index[key] = cols.size();
            cols.push_back({st.a, st.e, f});
        }
        return true;
    });

    const int n = static_cast<int>(cols.size());
    const Rational avg = Rational(2 * h.edge_count()) / Rational(static_cast<long>(r) * (r - 1));

    // Balanced polytope: marginals equal across classes, total weight 1.
    auto balanced_lp = [&](int pi, int pj, bool maximize) {
        LpBuilder lp(n);
        lp.set_sense(maximize ? LpSense::Maximize : LpSense::Minimize);
        for (int i = 0; i + 1 < r; ++i) {
            std::vector<Rational> row(n, 0);
            for (int c = 0; c < n; ++c) row[c] = Rational(cols[c].a[i] - cols[c].a[i + 1]);
            lp.add_eq(std::move(row), 0);
        }
        std::vector<Rational> one(n, 1);
        lp.add_eq(std::move(one), 1);
        for (int c = 0; c < n; ++c)
            lp.set_objective(c, Rational(cols[c].e[pi][pj]) - avg);
        return solve_lp(lp.build());
    };

    for (int i = 0; i < r && !rep.exists_nonbalanced; ++i) {
        for (int j = i + 1; j < r && !rep.exists_nonbalanced; ++j) {
            for (bool maximize : {true, false}) {
                LpOutcome out = balanced_lp(i, j, maximize);
                if (out.infeasible()) return rep; // no balanced fractional factor at all
                if (out.unbounded())
                    throw ContractViolation("balanced polytope LP unbounded");
                if (out.value != 0) {
                    rep.exists_nonbalanced = true;
                    std::vector<Rational> x = LpBuilder::structural(out.point, n);
                    BigInt scale = common_denominator(x);
                    for (int c = 0; c < n; ++c) {
                        Rational w = x[c] * Rational(scale);
                        if (w != 0) rep.certificate.emplace_back(cols[c].rep, w.get_num());
                    }
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace hdisc
