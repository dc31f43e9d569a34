#include "qcoh/gw_engine.hpp"

namespace qcoh {

Int gw_invariant(const FanoModel& model, const GWTable& table, const EffectiveClass& beta,
                 const std::vector<int>& classes) {
  for (int c : classes) {
    if (c < 0 || c > model.m()) throw std::out_of_range("gw_invariant: basis index " + std::to_string(c) + " out of range");
  }
  if (beta.arity() != static_cast<std::size_t>(model.divisor_count()))
    throw std::invalid_argument("gw_invariant: curve class arity mismatch");

  // (I) constant maps: the classical triple intersection
  if (beta.total() == 0) {
    if (classes.size() != 3) return Int(0);
    return model.triple(classes[0], classes[1], classes[2]);
  }
  // (II) the fundamental class kills every invariant with beta != 0
  for (int c : classes)
    if (c == 0) return Int(0);

  long codim_sum = 0;
  for (int c : classes) codim_sum += model.codim(c);
  if (codim_sum != expected_dimension(model, beta, static_cast<int>(classes.size()))) return Int(0);

  // (III) each divisor insertion contributes \int_beta T_i
  Int factor = 1;
  MultiIndex n(static_cast<std::size_t>(model.nondivisor_count()));
  for (int c : classes) {
    if (model.is_divisor(c)) {
      factor *= beta[static_cast<std::size_t>(c - 1)];
    } else {
      n[static_cast<std::size_t>(c - model.divisor_count() - 1)] += 1;
    }
  }
  if (factor == 0) return Int(0);
  return factor * table.at(beta, n);
}

}  // namespace qcoh
