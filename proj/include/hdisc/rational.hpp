#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hdisc/errors.hpp"

namespace hdisc {

// Exact arbitrary-precision fraction. mpq_class keeps the canonical form
// (positive denominator, coprime) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ContractViolation("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw ParseError("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

// Least common multiple of the denominators; scaling by it makes every
// entry an integer.
inline BigInt common_denominator(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

} // namespace hdisc
