#pragma once

#include <vector>

#include "hdisc/rational.hpp"

namespace hdisc {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form, in place. Returns the pivot column of each
// final nonzero row.
std::vector<int> rref(Matrix& m);

// Basis of the right null space {v : m v = 0}. Empty iff the kernel is
// trivial. Vectors are normalized to primitive integer form (coprime
// integer entries, first nonzero entry positive) so regression values can
// be compared verbatim.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

// Scale so entries are coprime integers with positive leading entry.
std::vector<Rational> primitive_normalize(const std::vector<Rational>& v);

// Whether v lies in the span of basis (each a vector of equal length).
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

} // namespace hdisc
