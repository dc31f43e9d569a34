#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcoh/exact.hpp"
#include "qcoh/model.hpp"

namespace qcoh {

/// A dimensionally valid invariant that the table does not hold.
class TableMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GWKey {
  EffectiveClass beta;
  MultiIndex insertions;  // multiplicities of T_{p+1}..T_m

  auto operator<=>(const GWKey&) const = default;
  bool operator==(const GWKey&) const = default;
  std::string str() const { return "beta=" + beta.str() + " n=" + insertions.str(); }
};

/// Genus-0 invariants N(n_{p+1},..,n_m; beta) = I_beta(T_{p+1}^{n_{p+1}} ... T_m^{n_m})
/// of one model. Only nonzero beta and only dimensionally valid keys are
/// admitted. `complete_c1` records the c1-degree through which every valid
/// key has been filled in.
class GWTable {
 public:
  GWTable(ModelPtr model, int complete_c1) : model_(std::move(model)), complete_c1_(complete_c1) {}

  const FanoModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  int complete_c1() const { return complete_c1_; }
  void set_complete_c1(int c) { complete_c1_ = c; }

  /// sum_i n_i (codim T_i - 1) == dim X + c1(beta) - 3
  bool dimension_matches(const EffectiveClass& beta, const MultiIndex& n) const;

  /// Throws std::invalid_argument for beta = 0, a negative value, or a key
  /// failing the dimension condition.
  void set(const EffectiveClass& beta, const MultiIndex& n, const Int& value);

  std::optional<Int> find(const EffectiveClass& beta, const MultiIndex& n) const;
  /// Like find but throws TableMiss.
  const Int& at(const EffectiveClass& beta, const MultiIndex& n) const;

  const std::map<GWKey, Int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// All dimensionally valid insertion vectors for beta.
  std::vector<MultiIndex> valid_insertions(const EffectiveClass& beta) const;

  bool operator==(const GWTable& o) const { return entries_ == o.entries_; }

 private:
  ModelPtr model_;
  int complete_c1_ = 0;
  std::map<GWKey, Int> entries_;
};

}  // namespace qcoh
