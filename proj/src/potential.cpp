#include "qcoh/potential.hpp"

#include <algorithm>

#include "qcoh/gw_engine.hpp"

namespace qcoh {

Truncation default_truncation(const FanoModel& model, int max_c1) {
  // At c1 <= max_c1 no invariant has more than dim + max_c1 - 3 insertions,
  // so three further layers are exact zeros and every third partial stays
  // complete up to the largest insertion count that actually occurs.
  return {max_c1, std::max(0, model.dimension() + max_c1 - 3) + 3};
}

GWSeries gamma_series(const GWTable& table, std::optional<Truncation> bounds) {
  const auto& model = table.model();
  Truncation tr = bounds.value_or(default_truncation(model, table.complete_c1()));
  if (tr.max_c1 > table.complete_c1())
    throw std::invalid_argument("bound mismatch: truncation asks for c1 <= " + std::to_string(tr.max_c1) +
                                " but the table is complete only through " + std::to_string(table.complete_c1()));
  GWSeries gamma(model.series_shape(), tr);
  for (const auto& [key, value] : table.entries()) gamma.add({key.beta, key.insertions}, Rational(value));
  return gamma;
}

PotentialBundle::PotentialBundle(ModelPtr model, GWSeries gamma) : model_(std::move(model)), gamma_(std::move(gamma)) {
  if (!(gamma_.shape() == model_->series_shape())) throw ArityError("potential: Gamma does not match the model");
  const int n = model_->rank();
  for (int i = 0; i < n; ++i) {
    GWSeries gi = partial(gamma_, i);
    for (int j = i; j < n; ++j) {
      GWSeries gij = partial(gi, j);
      for (int k = j; k < n; ++k) {
        GWSeries phi = constant(Rational(model_->triple(i, j, k)));
        phi += partial(gij, k);
        phi_.emplace(std::array<int, 3>{i, j, k}, std::move(phi));
      }
    }
  }
}

GWSeries PotentialBundle::partial(const GWSeries& s, int basis_index) const {
  if (basis_index == 0) return GWSeries(s.shape(), s.bounds());  // Gamma does not involve y_0
  if (model_->is_divisor(basis_index)) return series_partial(s, SeriesVar::divisor(basis_index - 1));
  return series_partial(s, SeriesVar::nondivisor(basis_index - model_->divisor_count() - 1));
}

const GWSeries& PotentialBundle::phi(int i, int j, int k) const {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = phi_.find(key);
  if (it == phi_.end()) throw std::out_of_range("phi: index out of range");
  return it->second;
}

GWSeries PotentialBundle::gamma_partial(int i, int j, int k) const {
  return partial(partial(partial(gamma_, i), j), k);
}

PotentialBundle build_potential(const GWTable& table, std::optional<Truncation> bounds) {
  return PotentialBundle(table.model_ptr(), gamma_series(table, bounds));
}

GWSeries f_bracket(const PotentialBundle& P, int i, int j, int k, int l) {
  const auto& model = P.model();
  GWSeries out = P.zero();
  for (int e = 0; e <= model.m(); ++e) {
    for (int f = 0; f <= model.m(); ++f) {
      const Rational& gef = model.inverse_pairing(e, f);
      if (gef == 0) continue;
      GWSeries term = series_mul(P.phi(i, j, e), P.phi(f, k, l));
      term *= gef;
      out += term;
    }
  }
  return out;
}

GWSeries wdvv_residual(const PotentialBundle& P, int i, int j, int k, int l) {
  return f_bracket(P, i, j, k, l) - f_bracket(P, j, k, i, l);
}

Int g_bracket(const GWTable& table, const EffectiveClass& beta, const std::vector<int>& classes, int q, int r, int s,
              int t) {
  const auto& model = table.model();
  const int n = static_cast<int>(classes.size());
  if (n < 4) throw std::invalid_argument("g_bracket: needs at least 4 insertions");
  for (int pos : {q, r, s, t})
    if (pos < 0 || pos >= n) throw std::out_of_range("g_bracket: position out of range");
  if (q == r || q == s || q == t || r == s || r == t || s == t)
    throw std::invalid_argument("g_bracket: positions must be distinct");

  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (i != q && i != r && i != s && i != t) free.push_back(i);

  // curve-class splits beta1 <= beta componentwise
  std::vector<EffectiveClass> splits;
  EffectiveClass b1(beta.arity());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == beta.arity()) {
      splits.push_back(b1);
      return;
    }
    for (int v = 0; v <= beta[pos]; ++v) {
      b1[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  std::map<std::pair<EffectiveClass, std::vector<int>>, Int> memo;
  auto invariant = [&](const EffectiveClass& b, std::vector<int> cls) -> Int {
    std::sort(cls.begin(), cls.end());
    auto key = std::make_pair(b, cls);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int v = gw_invariant(model, table, b, cls);
    memo.emplace(std::move(key), v);
    return v;
  };

  Rational total = 0;
  const std::size_t nfree = free.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << nfree); ++mask) {
    std::vector<int> side_a{classes[static_cast<std::size_t>(q)], classes[static_cast<std::size_t>(r)]};
    std::vector<int> side_b{classes[static_cast<std::size_t>(s)], classes[static_cast<std::size_t>(t)]};
    for (std::size_t i = 0; i < nfree; ++i)
      ((mask >> i) & 1 ? side_a : side_b).push_back(classes[static_cast<std::size_t>(free[i])]);
    for (const auto& beta1 : splits) {
      EffectiveClass beta2 = beta - beta1;
      for (int e = 0; e <= model.m(); ++e) {
        for (int f = 0; f <= model.m(); ++f) {
          const Rational& gef = model.inverse_pairing(e, f);
          if (gef == 0) continue;
          side_a.push_back(e);
          Int left = invariant(beta1, side_a);
          side_a.pop_back();
          if (left == 0) continue;
          side_b.push_back(f);
          Int right = invariant(beta2, side_b);
          side_b.pop_back();
          total += gef * left * right;
        }
      }
    }
  }
  return to_int(total, "G-bracket");
}

}  // namespace qcoh
