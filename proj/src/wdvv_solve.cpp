#include <algorithm>
#include <set>

#include "qcoh/gw_engine.hpp"
#include "qcoh/linear.hpp"
#include "qcoh/potential.hpp"

namespace qcoh {

namespace {

GWSeries table_gamma(const GWTable& table, const Truncation& tr) {
  GWSeries g(table.model().series_shape(), tr);
  for (const auto& [key, v] : table.entries()) g.add({key.beta, key.insertions}, Rational(v));
  return g;
}

/// Residuals of all canonical equations, restricted to curve class beta.
std::vector<GWSeries> residuals_at(const ModelPtr& model, GWSeries gamma, const std::vector<WdvvEquationId>& eqs,
                                   const EffectiveClass& beta) {
  PotentialBundle P(model, std::move(gamma));
  std::vector<GWSeries> out;
  out.reserve(eqs.size());
  for (const auto& eq : eqs) {
    const auto& [i, j, k, l] = eq.idx;
    out.push_back(wdvv_residual(P, i, j, k, l).restricted_to_degree(beta));
  }
  return out;
}

bool revlex_less(const MultiIndex& x, const MultiIndex& y) {
  for (std::size_t i = x.arity(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace

GWTable wdvv_solve(ModelPtr model, const GWTable& seeds, int c1_max, WdvvSolveStats* stats) {
  if (!(seeds.model() == *model)) throw std::invalid_argument("wdvv_solve: seeds belong to a different model");
  GWTable result(model, c1_max);
  for (const auto& [key, v] : seeds.entries())
    if (model->c1_degree(key.beta) <= c1_max) result.set(key.beta, key.insertions, v);

  const auto eqs = wdvv_canonical_equations(model->m());
  const Truncation tr = default_truncation(*model, c1_max);
  const SeriesShape shape = model->series_shape();
  WdvvSolveStats local;

  for (const auto& beta : model->effective_classes(c1_max)) {
    auto insertions = result.valid_insertions(beta);
    std::sort(insertions.begin(), insertions.end(), revlex_less);
    std::vector<MultiIndex> unknowns;
    for (const auto& n : insertions)
      if (!result.find(beta, n)) unknowns.push_back(n);

    // Degree-beta coefficients are affine in the degree-beta unknowns: the
    // quadratic terms pair up lower classes, the linear ones pair an unknown
    // with a classical triple product.
    auto base = residuals_at(model, table_gamma(result, tr), eqs, beta);
    std::vector<std::vector<GWSeries>> linear;
    for (const auto& u : unknowns) {
      GWSeries e(shape, tr);
      e.add({beta, u}, Rational(1));
      linear.push_back(residuals_at(model, std::move(e), eqs, beta));
    }

    RationalMatrix rows;
    std::vector<Rational> rhs;
    std::vector<std::string> row_labels;
    for (std::size_t q = 0; q < eqs.size(); ++q) {
      std::set<SeriesKey> keys;
      for (const auto& [k, v] : base[q].terms()) keys.insert(k);
      for (const auto& lin : linear)
        for (const auto& [k, v] : lin[q].terms()) keys.insert(k);
      for (const auto& key : keys) {
        std::vector<Rational> row;
        for (const auto& lin : linear) row.push_back(lin[q].coefficient(key));
        rows.push_back(std::move(row));
        rhs.push_back(-base[q].coefficient(key));
        row_labels.push_back(eqs[q].str() + " at n=" + key.insertions.str());
      }
    }
    local.equations_checked += rows.size();

    if (unknowns.empty()) {
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rhs[r] != 0)
          throw InconsistencyError("wdvv_solve: " + row_labels[r] + " fails for beta=" + beta.str() +
                                   " with the given values");
      continue;
    }
    if (rows.empty())
      throw UnreachableError("wdvv_solve: no equation involves " + GWKey{beta, unknowns.front()}.str());

    auto sol = eliminate(rows, rhs);
    if (!sol.consistent)
      throw InconsistencyError("wdvv_solve: coefficient equations at beta=" + beta.str() + " are inconsistent");
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (!sol.solution[u])
        throw UnreachableError("wdvv_solve: no solvable equation for " + GWKey{beta, unknowns[u]}.str());
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      GWKey key{beta, unknowns[u]};
      Int v = to_int(*sol.solution[u], "wdvv_solve: " + key.str());
      if (v < 0) throw InconsistencyError("wdvv_solve: negative invariant at " + key.str() + ": " + v.get_str());
      result.set(beta, unknowns[u], v);
      ++local.unknowns_solved;
    }
  }
  if (stats) *stats = local;
  return result;
}

GWTable default_seeds(ModelPtr model) {
  GWTable seeds(model, 0);
  const int p = model->divisor_count();
  if (model->name() == "q3") {
    seeds.set(MultiIndex{1}, MultiIndex{1, 1}, Int(1));
  } else if (model->name() == "p1xp1") {
    seeds.set(MultiIndex{1, 0}, MultiIndex{1}, Int(1));
    seeds.set(MultiIndex{0, 1}, MultiIndex{1}, Int(1));
  } else if (p == 1 && model->m() == model->dimension() && model->c1_degrees()[0] == model->dimension() + 1) {
    // projective space: one line through two points (on P1: the line itself)
    MultiIndex n(static_cast<std::size_t>(model->nondivisor_count()));
    if (model->dimension() >= 2) n[n.arity() - 1] = 2;
    seeds.set(MultiIndex{1}, n, Int(1));
  } else {
    throw std::invalid_argument("no default seeds for model '" + model->name() + "'");
  }
  return seeds;
}

}  // namespace qcoh
