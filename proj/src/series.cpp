#include "qcoh/series.hpp"

#include <sstream>

namespace qcoh {

GWSeries::GWSeries(SeriesShape shape, Truncation bounds)
    : shape_(std::move(shape)), bounds_(bounds) {}

GWSeries GWSeries::constant(SeriesShape shape, Truncation bounds, const Rational& value) {
  GWSeries s(std::move(shape), bounds);
  s.add({MultiIndex(s.shape_.c1_weights.size()),
         MultiIndex(static_cast<std::size_t>(s.shape_.nondivisor_count))},
        value);
  return s;
}

bool GWSeries::in_bounds(const SeriesKey& key) const {
  return c1_degree(key.degree) <= bounds_.max_c1 && key.insertions.total() <= bounds_.max_insertions;
}

Rational GWSeries::coefficient(const SeriesKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GWSeries::add(const SeriesKey& key, const Rational& value) {
  if (key.degree.arity() != shape_.c1_weights.size() ||
      key.insertions.arity() != static_cast<std::size_t>(shape_.nondivisor_count)) {
    throw ArityError("series key " + key.degree.str() + key.insertions.str() + " has wrong arity");
  }
  if (value == 0 || !in_bounds(key)) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void GWSeries::require_same_shape(const GWSeries& o) const {
  if (!(shape_ == o.shape_)) throw ArityError("series arity mismatch");
}

GWSeries& GWSeries::operator+=(const GWSeries& o) {
  require_same_shape(o);
  bounds_ = bounds_.meet(o.bounds_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!in_bounds(it->first)) it = terms_.erase(it);
    else ++it;
  }
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

GWSeries& GWSeries::operator-=(const GWSeries& o) {
  GWSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

GWSeries& GWSeries::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

GWSeries GWSeries::restricted_to_degree(const MultiIndex& d) const {
  GWSeries out(shape_, bounds_);
  for (const auto& [k, v] : terms_)
    if (k.degree == d) out.terms_.emplace(k, v);
  return out;
}

std::string GWSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str() << "*[d=" << k.degree.str() << " n=" << k.insertions.str() << "]";
  }
  return os.str();
}

GWSeries series_mul(const GWSeries& a, const GWSeries& b) {
  if (!(a.shape() == b.shape())) throw ArityError("series_mul: arity mismatch");
  GWSeries out(a.shape(), a.bounds().meet(b.bounds()));
  const std::size_t nd = static_cast<std::size_t>(a.shape().nondivisor_count);
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      SeriesKey key{ka.degree + kb.degree, ka.insertions + kb.insertions};
      if (!out.in_bounds(key)) continue;
      Rational c = va * vb;
      for (std::size_t i = 0; i < nd; ++i) {
        c *= binomial_z(key.insertions[i], ka.insertions[i]);
      }
      out.add(key, c);
    }
  }
  return out;
}

GWSeries series_partial(const GWSeries& a, SeriesVar var) {
  const auto& shape = a.shape();
  if (var.kind == SeriesVar::Kind::divisor) {
    if (var.index < 0 || var.index >= shape.divisor_count())
      throw std::out_of_range("series_partial: unknown divisor variable " + std::to_string(var.index));
    GWSeries out(shape, a.bounds());
    for (const auto& [k, v] : a.terms()) out.add(k, v * k.degree[static_cast<std::size_t>(var.index)]);
    return out;
  }
  if (var.index < 0 || var.index >= shape.nondivisor_count)
    throw std::out_of_range("series_partial: unknown non-divisor variable " + std::to_string(var.index));
  Truncation bounds = a.bounds();
  bounds.max_insertions -= 1;
  GWSeries out(shape, bounds);
  const auto j = static_cast<std::size_t>(var.index);
  for (const auto& [k, v] : a.terms()) {
    if (k.insertions[j] == 0) continue;
    SeriesKey shifted = k;
    shifted.insertions[j] -= 1;
    out.add(shifted, v);
  }
  return out;
}

}  // namespace qcoh
