#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/exact.hpp"
#include "qcoh/multi_index.hpp"

namespace qcoh {

/// Names and positive integer degrees of a polynomial ring's variables.
struct VariableSet {
  std::vector<std::string> names;
  std::vector<int> degrees;

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> find(const std::string& name) const;
  bool operator==(const VariableSet&) const = default;
};

/// Sparse polynomial over the integers in graded variables.
class GradedPoly {
 public:
  using Terms = std::map<MultiIndex, Int>;

  GradedPoly() = default;
  explicit GradedPoly(std::shared_ptr<const VariableSet> vars) : vars_(std::move(vars)) {}

  static GradedPoly constant(std::shared_ptr<const VariableSet> vars, const Int& c);
  static GradedPoly variable(std::shared_ptr<const VariableSet> vars, std::size_t i);
  static GradedPoly monomial(std::shared_ptr<const VariableSet> vars, MultiIndex exps, const Int& c);

  const VariableSet& vars() const { return *vars_; }
  const std::shared_ptr<const VariableSet>& vars_ptr() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coefficient(const MultiIndex& m) const;
  void add(const MultiIndex& m, const Int& c);

  long monomial_degree(const MultiIndex& m) const { return m.weighted(vars_->degrees); }
  /// Degree of a homogeneous polynomial, nullopt for zero or inhomogeneous.
  std::optional<long> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  /// Sets the listed variables to zero.
  GradedPoly specialize_zero(const std::vector<std::size_t>& which) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Int& s);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Int& s) { return a *= s; }
  friend GradedPoly operator*(const Int& s, GradedPoly a) { return a *= s; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly pow(unsigned e) const;

  bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::shared_ptr<const VariableSet> vars_;
  Terms terms_;
};

}  // namespace qcoh
