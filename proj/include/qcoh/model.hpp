#pragma once

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoh/exact.hpp"
#include "qcoh/multi_index.hpp"
#include "qcoh/series.hpp"

namespace qcoh {

/// Thrown when model data violates one of the FanoModel invariants. The
/// message names the invariant.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisClass {
  std::string name;
  int codim = 0;
  bool operator==(const BasisClass&) const = default;
};

/// Coordinates of a curve class in the effective basis beta_1..beta_p dual to
/// the divisor classes T_1..T_p, so d_i = \int_beta T_i.
using EffectiveClass = MultiIndex;

/// Raw data a model is built from (builtin tables or a model file).
struct ModelData {
  std::string name;
  int dimension = 0;
  std::vector<BasisClass> basis;
  std::vector<std::vector<Int>> pairing;
  struct Triple {
    int i, j, k;
    Int value;
  };
  std::vector<Triple> triples;
  struct Effective {
    int dual_divisor_index;  // i in 1..p
    int c1_degree;
  };
  std::vector<Effective> effective;
};

/// Cohomological data of a homogeneous space X: Schubert basis T_0..T_m with
/// T_0 = 1 and T_1..T_p the divisor classes, the intersection pairing and its
/// inverse, classical triple products and the effective-curve lattice.
class FanoModel {
 public:
  /// Validates every invariant; throws ModelError naming the first violation.
  explicit FanoModel(ModelData data);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  int rank() const { return static_cast<int>(basis_.size()); }  // m + 1
  int m() const { return rank() - 1; }
  int divisor_count() const { return p_; }                      // p
  int nondivisor_count() const { return m() - p_; }
  const std::vector<BasisClass>& basis() const { return basis_; }
  int codim(int i) const { return basis_[static_cast<std::size_t>(i)].codim; }
  bool is_divisor(int i) const { return i >= 1 && i <= p_; }

  const Int& pairing(int i, int j) const { return g_[idx(i, j)]; }
  const Rational& inverse_pairing(int i, int j) const { return ginv_[idx(i, j)]; }
  const Int& triple(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * rank() + j) * rank() + k];
  }

  /// \int_{beta_i} c_1(T_X) for the effective generators, i = 1..p (0-based vector).
  const std::vector<int>& c1_degrees() const { return c1_; }
  long c1_degree(const EffectiveClass& beta) const { return beta.weighted(c1_); }

  /// Codimension weights (codim - 1) of the non-divisor classes T_{p+1}..T_m.
  std::vector<int> insertion_weights() const;

  SeriesShape series_shape() const { return {c1_, nondivisor_count()}; }

  /// All nonzero effective classes with c1-degree <= max_c1, ordered by
  /// (c1-degree, lexicographic coordinates).
  std::vector<EffectiveClass> effective_classes(int max_c1) const;

  ModelData data() const;

  bool operator==(const FanoModel& o) const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * rank() + j; }

  std::string name_;
  int dimension_ = 0;
  int p_ = 0;
  std::vector<BasisClass> basis_;
  std::vector<Int> g_;
  std::vector<Rational> ginv_;
  std::vector<Int> c_;
  std::vector<int> c1_;
};

using ModelPtr = std::shared_ptr<const FanoModel>;

/// Builtin names: p1, p2, p3, q3, p1xp1, and pr with r >= 1 (also accepted as
/// "p<r>"). Throws ModelError on an unknown name.
ModelPtr builtin_model(const std::string& name, int r = 0);
ModelPtr projective_space(int r);

/// dim X + \int_beta c_1 + n - 3.
long expected_dimension(const FanoModel& model, const EffectiveClass& beta, int n);

/// Reads a model file (JSON). Throws ModelError on parse errors and invariant
/// violations.
ModelPtr load_model(const std::filesystem::path& path);
ModelPtr parse_model(const std::string& text);
std::string serialize_model(const FanoModel& model);

}  // namespace qcoh
