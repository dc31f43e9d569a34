#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoh/gw_table.hpp"
#include "qcoh/model.hpp"

namespace qcoh {

/// An overdetermined system disagreed with itself.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No available equation determines some unknown.
class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rational plane curves

/// N_1 = 1 and, for d >= 2,
///   N_d = sum_{d1+d2=d} N_d1 N_d2 [d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1)].
/// Returned table is keyed by (d, n = 3d - 1) on builtin p2.
GWTable nd_plane(int d_max);

/// The same numbers as a plain vector, index d (entry 0 unused).
std::vector<Int> plane_curve_numbers(int d_max);

// ---------------------------------------------------------------------------
// P^3 and Q^3

enum class Fano3 { p3, q3 };

Fano3 parse_fano3(const std::string& name);

/// One instance of recursion 1..6 at (a, b): sum coeff * N = rhs, where
/// the left side only involves numbers of the current degree and `rhs` is
/// the quadratic sum over strictly lower degrees.
struct RecursionInstance {
  int recursion = 0;
  int a = 0, b = 0;
  std::vector<std::pair<std::array<int, 2>, Int>> lhs;
  Int rhs;
};

/// Every applicable instance of the six recursions at degree d. `lower`
/// returns N_{a,b} for any degree below d.
std::vector<RecursionInstance> fano3_recursions(Fano3 space, int d,
                                                const std::function<Int(int, int)>& lower);

/// N_{a,b}: degree-d rational curves meeting a general lines and b general
/// points, a + 2b = 4d on P^3 (c = 1), a + 2b = 3d on Q^3 (c = 2). Every
/// value is solved from one recursion and checked against all others.
/// Keyed by (d, n = (a, b)).
GWTable fano3_solve(Fano3 space, int d_max);

/// Instances of recursions 1..6 that fail on the table; empty when all hold.
std::vector<RecursionInstance> fano3_violations(Fano3 space, const GWTable& table, int d_max);

// ---------------------------------------------------------------------------
// Axioms

/// I_beta(T_{c_1} ... T_{c_n}) for basis indices `classes`, reduced by the
/// classical, unit and divisor axioms before consulting the table.
Int gw_invariant(const FanoModel& model, const GWTable& table, const EffectiveClass& beta,
                 const std::vector<int>& classes);
inline Int gw_invariant(const GWTable& table, const EffectiveClass& beta, const std::vector<int>& classes) {
  return gw_invariant(table.model(), table, beta, classes);
}

// ---------------------------------------------------------------------------
// WDVV equations

/// Label of the equation A(i,j,k,l) = F(i,j|k,l) - F(j,k|i,l) = 0.
struct WdvvEquationId {
  std::array<int, 4> idx{};
  bool canonical = false;

  auto operator<=>(const WdvvEquationId& o) const { return idx <=> o.idx; }
  bool operator==(const WdvvEquationId& o) const { return idx == o.idx; }
  std::string str() const;
};

/// Canonical representative of the class of (i,j,k,l) under
/// A(k,j,i,l) = -A(i,j,k,l) and A(l,k,j,i) = A(i,j,k,l), with the sign
/// relating them. Returns sign 0 for identically vanishing equations
/// (i = k, j = l, or an index 0).
std::pair<WdvvEquationId, int> wdvv_canonical_form(const std::array<int, 4>& idx);

/// m(m-1)(m^2-m+2)/8
Int wdvv_count(long m);
/// 3 C(m,4) + m C(m-1,2) + C(m,2)
Int wdvv_count_binomial(long m);

/// One canonical representative per nontrivial class with indices in 1..m.
std::vector<WdvvEquationId> wdvv_canonical_equations(int m);

// ---------------------------------------------------------------------------
// Generic solver

struct WdvvSolveStats {
  std::size_t unknowns_solved = 0;
  std::size_t equations_checked = 0;
};

/// Fills in every invariant with c1(beta) <= c1_max from the seed values by
/// reading off coefficient equations of the WDVV system, degree by degree.
/// Unknowns of one curve class enter the degree-beta equations linearly;
/// all of them are solved exactly and every other coefficient equation of
/// that class is checked.
GWTable wdvv_solve(ModelPtr model, const GWTable& seeds, int c1_max, WdvvSolveStats* stats = nullptr);

/// Seeds that determine the builtin models: lines through two points (P^r),
/// N_{1,1} on Q^3, the two rulings through a point on P1xP1.
GWTable default_seeds(ModelPtr model);

}  // namespace qcoh
