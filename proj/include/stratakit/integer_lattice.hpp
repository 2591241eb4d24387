#pragma once

#include "stratakit/rational.hpp"

#include <vector>

namespace stratakit {

using IntVector = std::vector<Integer>;

/// Row-style Hermite normal form of the Z-span of `rows` (vectors in Z^width).
/// Zero rows are dropped; pivots are positive and strictly increase by column;
/// entries above a pivot lie in [0, pivot). Two families span the same lattice
/// iff their Hermite forms are equal.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows, std::size_t width);

/// Nonzero diagonal of the Smith normal form (invariant factors, ascending by divisibility).
std::vector<Integer> smith_invariants(std::vector<IntVector> rows, std::size_t width);

/// Is v in the lattice spanned by the rows of a Hermite form?
bool lattice_contains(const std::vector<IntVector>& hnf, const IntVector& v);

/// Basis of {a in Z^r : sum_i a_i rows[i] = 0}.
std::vector<IntVector> integer_relations(const std::vector<IntVector>& rows, std::size_t width);

bool lexicographic_less(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

} // namespace stratakit
