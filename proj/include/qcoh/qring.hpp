#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcoh/graded_poly.hpp"
#include "qcoh/gw_table.hpp"
#include "qcoh/linear.hpp"
#include "qcoh/potential.hpp"

namespace qcoh {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool operator==(const Check&) const = default;
};

// ---------------------------------------------------------------------------
// Big quantum ring: structure constants in the truncated potential

/// Element sum_f x_f T_f with series coefficients, indexed by f = 0..m.
using BigElement = std::vector<GWSeries>;

BigElement big_basis(const PotentialBundle& P, int i);
/// T_i * T_j = sum_{e,f} Phi_{ije} g^{ef} T_f
BigElement big_product(const PotentialBundle& P, int i, int j);
BigElement big_multiply(const PotentialBundle& P, const BigElement& x, const BigElement& y);
/// (T_i*T_j)*T_k - T_i*(T_j*T_k)
BigElement big_associator(const PotentialBundle& P, int i, int j, int k);
bool is_zero(const BigElement& x);

/// Z = T_1 on the plane and the cubic
///   Z^3 - Gamma_111 Z^2 - 2 Gamma_112 Z - Gamma_122 = 0.
struct BigPresentation {
  GWSeries gamma111, gamma112, gamma122;
  BigElement cube;      // T_1 * T_1 * T_1
  BigElement residual;  // cubic evaluated at Z = T_1
};

/// Evaluates the cubic on a plane potential. Throws InconsistencyError if
/// the residual is not the zero series, std::invalid_argument if P is not a
/// plane potential.
BigPresentation presentation_from_big(const PotentialBundle& P);

// ---------------------------------------------------------------------------
// Small quantum ring

/// Structure constants over Z[q_1..q_p] in the Schubert basis, with
/// deg q_i = c1(beta_i):
///   T_i * T_j = sum_{e,f} (c_{ije} + Gbar_{ije}) g^{ef} T_f,
///   Gbar_{ijk} = sum_{beta != 0} I_beta(T_i T_j T_k) q^beta.
class SmallQuantumRing {
 public:
  using Element = std::vector<GradedPoly>;

  /// Throws TableMiss when a needed 3-point invariant is absent.
  explicit SmallQuantumRing(const GWTable& table);

  const FanoModel& model() const { return *model_; }
  const std::shared_ptr<const VariableSet>& q_vars() const { return qvars_; }
  int rank() const { return model_->rank(); }

  Element zero() const;
  Element basis(int i) const;
  const Element& product(int i, int j) const { return products_[static_cast<std::size_t>(i * rank() + j)]; }
  Element multiply(const Element& x, const Element& y) const;
  /// Sets every q to 0, leaving the cup product.
  Element classical(const Element& x) const;
  /// codim-weighted degree of q^a T_f, or nullopt if x is not homogeneous.
  std::optional<long> degree(const Element& x) const;
  std::string str(const Element& x) const;

 private:
  ModelPtr model_;
  std::shared_ptr<const VariableSet> qvars_;
  std::vector<Element> products_;
};

/// T_i u T_j over the integers.
std::vector<Int> cup_product(const FanoModel& model, int i, int j);

// ---------------------------------------------------------------------------
// Presentations

/// Quotient of Z[vars] by homogeneous relations, with normal forms computed
/// degree by degree through max_degree. Monomials are ordered first by the
/// degree carried by the non-q variables, then graded reverse lexicographic;
/// the larger monomial is eliminated first.
class PresentationIdeal {
 public:
  PresentationIdeal(std::shared_ptr<const VariableSet> vars, std::vector<GradedPoly> relations,
                    std::vector<std::size_t> q_indices, long max_degree);

  const VariableSet& vars() const { return *vars_; }
  const std::shared_ptr<const VariableSet>& vars_ptr() const { return vars_; }
  const std::vector<GradedPoly>& relations() const { return relations_; }
  const std::vector<std::size_t>& q_indices() const { return q_; }
  long max_degree() const { return max_degree_; }

  GradedPoly variable(std::size_t i) const { return GradedPoly::variable(vars_, i); }
  GradedPoly variable(const std::string& name) const;

  /// Throws std::out_of_range above max_degree and IntegralityError if the
  /// reduction leaves a non-integer coefficient.
  GradedPoly normal_form(const GradedPoly& p) const;
  GradedPoly multiply(const GradedPoly& a, const GradedPoly& b) const { return normal_form(a * b); }
  bool reduces_to_zero(const GradedPoly& p) const { return normal_form(p).is_zero(); }

  std::vector<MultiIndex> standard_monomials(long degree) const;
  /// Standard monomials free of q, over all degrees through max_degree.
  std::vector<MultiIndex> quotient_basis() const;
  std::size_t quotient_rank() const { return quotient_basis().size(); }

  /// Same generators, relations at q = 0 together with q itself.
  PresentationIdeal classical() const;

 private:
  struct DegreeTable {
    std::vector<MultiIndex> monomials;  // descending in the monomial order
    RationalMatrix rref;                // rows with leading entries at `pivots`
    std::vector<std::size_t> pivots;
  };
  void build_degree(long degree);
  bool monomial_greater(const MultiIndex& x, const MultiIndex& y) const;

  std::shared_ptr<const VariableSet> vars_;
  std::vector<GradedPoly> relations_;
  std::vector<std::size_t> q_;
  long max_degree_;
  std::map<long, DegreeTable> tables_;
};

/// Z[T, q] / (T^{r+1} - q), deg T = 1, deg q = r + 1.
PresentationIdeal pr_presentation(int r);

/// Compares the presentation with the small ring of P^r computed from a
/// solved table: multiplication rules, T^{*(r+1)} = q T_0, the map
/// T^i -> T_i on every product, and the classical limit.
std::vector<Check> verify_pr_presentation(int r);

/// Variables s1..sk (deg i) and q (deg n) for Gr(p, n), k = n - p.
std::shared_ptr<const VariableSet> grassmannian_variables(int p, int n);

/// S_r = det(sigma_{1+j-i})_{1<=i,j<=r} with sigma_0 = 1 and sigma_i = 0
/// outside 0..k, over grassmannian_variables(p, n).
GradedPoly s_r_determinant(int p, int n, int r);

/// Z[sigma_1..sigma_k, q] / (S_{p+1}, ..., S_{n-1}, S_n + (-1)^k q).
/// Throws InconsistencyError if the quotient rank is not C(n, p).
PresentationIdeal grassmannian_presentation(int p, int n);

/// Rank, classical relations, the formal identity and sigma_k * sigma_{(1^p)} = q.
std::vector<Check> verify_grassmannian(int p, int n);

// ---------------------------------------------------------------------------
// n-point numbers of the small ring

/// <gamma_1, ..., gamma_n>_beta. For n = 3 this is I_beta; for n > 3 it is
///   sum_{beta1+beta2=beta} sum_{e,f} <gamma_1..gamma_k, T_e>_beta1 g^{ef}
///                                    <T_f, gamma_{k+1}..gamma_n>_beta2
/// with 1 < k < n - 1 (sub-brackets split at 2).
Rational fixed_points_number(const GWTable& table, const EffectiveClass& beta, const std::vector<int>& classes,
                             int split = 2);

}  // namespace qcoh
