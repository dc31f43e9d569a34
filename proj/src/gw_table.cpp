#include "qcoh/gw_table.hpp"

namespace qcoh {

bool GWTable::dimension_matches(const EffectiveClass& beta, const MultiIndex& n) const {
  auto w = model_->insertion_weights();
  return n.weighted(w) == model_->dimension() + model_->c1_degree(beta) - 3;
}

void GWTable::set(const EffectiveClass& beta, const MultiIndex& n, const Int& value) {
  if (beta.arity() != static_cast<std::size_t>(model_->divisor_count()) ||
      n.arity() != static_cast<std::size_t>(model_->nondivisor_count()))
    throw std::invalid_argument("GWTable::set: key arity mismatch");
  if (beta.total() == 0) throw std::invalid_argument("GWTable::set: beta = 0 is handled by the classical axiom");
  if (!beta.non_negative() || !n.non_negative()) throw std::invalid_argument("GWTable::set: negative key entry");
  if (!dimension_matches(beta, n))
    throw std::invalid_argument("GWTable::set: key " + GWKey{beta, n}.str() + " fails the dimension condition");
  if (value < 0) throw std::invalid_argument("GWTable::set: negative invariant at " + GWKey{beta, n}.str());
  entries_[GWKey{beta, n}] = value;
}

std::optional<Int> GWTable::find(const EffectiveClass& beta, const MultiIndex& n) const {
  auto it = entries_.find(GWKey{beta, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const Int& GWTable::at(const EffectiveClass& beta, const MultiIndex& n) const {
  auto it = entries_.find(GWKey{beta, n});
  if (it == entries_.end())
    throw TableMiss("table miss at " + GWKey{beta, n}.str() + " (table complete through c1 <= " +
                    std::to_string(complete_c1_) + ")");
  return it->second;
}

std::vector<MultiIndex> GWTable::valid_insertions(const EffectiveClass& beta) const {
  std::vector<MultiIndex> out;
  auto w = model_->insertion_weights();
  long target = model_->dimension() + model_->c1_degree(beta) - 3;
  if (w.empty()) {
    if (target == 0) out.emplace_back(0);
    return out;
  }
  for_each_weighted(w, target, [&](const MultiIndex& n) { out.push_back(n); });
  return out;
}

}  // namespace qcoh
