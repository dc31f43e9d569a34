#pragma once

#include <string>
#include <vector>

#include "qcoh/gw_table.hpp"

namespace qcoh {

/// D(A,B; beta1,beta2): marks 1..n split into A and B, the curve class into
/// beta1 + beta2. The datum is unordered; `canonical()` puts the smaller
/// side (A, beta1) first.
struct BoundaryDatum {
  std::vector<int> a, b;  // sorted marks, 1-based
  EffectiveClass beta1, beta2;

  BoundaryDatum canonical() const;
  /// Swaps sides so that `mark` lies in A (no-op if it already does).
  BoundaryDatum oriented(int mark) const;
  bool contains_a(int mark) const;
  bool contains_b(int mark) const;

  auto operator<=>(const BoundaryDatum&) const = default;
  bool operator==(const BoundaryDatum&) const = default;
  std::string str() const;
};

/// A ∪ B = [n], disjoint, beta1 + beta2 = beta with both effective, and a
/// side of class 0 carries at least two marks.
bool is_valid_datum(const BoundaryDatum& datum, int n, const EffectiveClass& beta);

/// Every boundary divisor of M_{0,n}(X, beta), once each, in canonical form
/// and sorted.
std::vector<BoundaryDatum> enumerate_boundary(int n, const EffectiveClass& beta);

/// D(i,j|k,l): all data with i,j in A and k,l in B, oriented accordingly.
/// Throws std::invalid_argument unless i,j,k,l are distinct marks in 1..n.
std::vector<BoundaryDatum> d_sum(int n, const EffectiveClass& beta, int i, int j, int k, int l);

/// One group of boundary data on the plane with the same contribution.
struct IntersectionItem {
  int d1 = 0;                 // degree on the side containing the two line marks
  int side_points = 0;        // point marks on that side besides s or t
  Int partitions;             // number of data in the group
  Int contribution;           // value of each datum
};

/// Points of Y ∩ D(q,r|s,t) and Y ∩ D(q,s|r,t) on M_{0,3d}(P2, d), where Y
/// puts q,r on general lines and the other 3d-2 marks on general points.
struct IntersectionCounts {
  int d = 0;
  Int lhs, rhs;                // summed over boundary data
  Int lhs_formula, rhs_formula;  // the same numbers from the closed sums
  std::vector<IntersectionItem> lhs_items, rhs_items;
};

/// Evaluates both boundary intersections from `table` (the plane numbers on
/// p2 through degree d). Throws TableMiss on a missing value.
IntersectionCounts intersection_counts(int d, const GWTable& table);

}  // namespace qcoh
