#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcoh/exact.hpp"

namespace qcoh {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse of a square matrix, nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& a);

/// Row echelon data of a linear system A x = b over the rationals.
struct EliminationResult {
  std::vector<std::optional<Rational>> solution;  // nullopt: column has no pivot
  std::vector<std::size_t> pivot_columns;
  bool consistent = true;  // false when some row reduces to 0 = nonzero
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination choosing pivots column by column in the given
/// order, so earlier columns are preferred. Columns without a pivot are
/// reported as undetermined; determined columns are those whose value does
/// not depend on any free column.
EliminationResult eliminate(RationalMatrix a, std::vector<Rational> b);

}  // namespace qcoh
