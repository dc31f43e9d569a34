#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "qcoh/gw_table.hpp"
#include "qcoh/series.hpp"

namespace qcoh {

/// Bounds used when none are given: c1 through the table's completeness
/// degree and every insertion count that degree allows.
Truncation default_truncation(const FanoModel& model, int max_c1);

/// Gamma(y) = sum_{beta != 0} N(n; beta) e^{d.y} prod y_i^{n_i}/n_i!, with
/// coefficients copied verbatim. Throws std::invalid_argument ("bound
/// mismatch") when `bounds` claims more c1-degrees than the table holds.
GWSeries gamma_series(const GWTable& table, std::optional<Truncation> bounds = std::nullopt);

/// Third partials of the genus-0 potential. The quantum part is represented
/// by Gamma, i.e. Phi without its terms of degree <= 2, which leaves every
/// third derivative unchanged:
///   Phi_{ijk} = c_{ijk} + d^3 Gamma / dy_i dy_j dy_k.
class PotentialBundle {
 public:
  PotentialBundle(ModelPtr model, GWSeries gamma);

  const FanoModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const GWSeries& gamma() const { return gamma_; }
  const Truncation& bounds() const { return gamma_.bounds(); }

  /// Phi_{ijk}, any index order.
  const GWSeries& phi(int i, int j, int k) const;
  /// Gamma_{ijk} (quantum part only).
  GWSeries gamma_partial(int i, int j, int k) const;

  GWSeries zero() const { return GWSeries(model_->series_shape(), bounds()); }
  GWSeries constant(const Rational& v) const { return GWSeries::constant(model_->series_shape(), bounds(), v); }

 private:
  GWSeries partial(const GWSeries& s, int basis_index) const;

  ModelPtr model_;
  GWSeries gamma_;
  std::map<std::array<int, 3>, GWSeries> phi_;
};

PotentialBundle build_potential(const GWTable& table, std::optional<Truncation> bounds = std::nullopt);

/// F(i,j|k,l) = sum_{e,f} Phi_{ije} g^{ef} Phi_{fkl}
GWSeries f_bracket(const PotentialBundle& P, int i, int j, int k, int l);

/// A(i,j,k,l) = F(i,j|k,l) - F(j,k|i,l)
GWSeries wdvv_residual(const PotentialBundle& P, int i, int j, int k, int l);

/// G(q,r|s,t) for the insertion list `classes` (basis indices; positions are
/// 0-based into the list): sum over partitions A containing q,r and B
/// containing s,t, over beta1 + beta2 = beta and e,f of
///   g^{ef} I_beta1(prod_A gamma . T_e) I_beta2(prod_B gamma . T_f).
Int g_bracket(const GWTable& table, const EffectiveClass& beta, const std::vector<int>& classes, int q, int r,
                   int s, int t);

}  // namespace qcoh
