#include "hdisc/linalg.hpp"

#include "hdisc/errors.hpp"

namespace hdisc {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw ContractViolation("rref: ragged matrix");

    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

std::vector<Rational> primitive_normalize(const std::vector<Rational>& v) {
    std::vector<Rational> out = v;
    BigInt den = common_denominator(out);
    for (auto& q : out) q *= Rational(den);
    BigInt g = 0;
    for (auto& q : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    if (g == 0) return out; // all-zero vector
    int sign = 0;
    for (const auto& q : out) {
        if (q != 0) { sign = sgn(q) > 0 ? 1 : -1; break; }
    }
    Rational scale = Rational(sign) / Rational(g);
    for (auto& q : out) { q *= scale; q.canonicalize(); }
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    Matrix a = m;
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][f];
        basis.push_back(primitive_normalize(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
    Matrix rows = basis;
    std::vector<int> p1 = rref(rows);
    rows.push_back(v);
    std::vector<int> p2 = rref(rows);
    return p1.size() == p2.size();
}

} // namespace hdisc
