#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace qcoh {

/// Exponent vector of non-negative integers with a fixed arity.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t arity) : exps_(arity, 0) {}
  MultiIndex(std::initializer_list<int> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t arity, std::size_t pos) {
    MultiIndex e(arity);
    e.exps_[pos] = 1;
    return e;
  }

  std::size_t arity() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  std::span<const int> values() const { return exps_; }

  int total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  /// Weighted degree sum_i exps[i] * weights[i].
  long weighted(std::span<const int> weights) const {
    long s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) s += static_cast<long>(exps_[i]) * weights[i];
    return s;
  }

  bool non_negative() const {
    for (int e : exps_)
      if (e < 0) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }
  MultiIndex operator-(const MultiIndex& o) const {
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    return r;
  }

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(exps_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> exps_;
};

/// Calls `fn(MultiIndex)` for every exponent vector of the given arity whose
/// weighted degree equals `target`. Weights must be positive.
template <class Fn>
void for_each_weighted(std::span<const int> weights, long target, Fn&& fn) {
  MultiIndex cur(weights.size());
  auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
    if (pos == weights.size()) {
      if (remaining == 0) fn(static_cast<const MultiIndex&>(cur));
      return;
    }
    for (int e = 0; static_cast<long>(e) * weights[pos] <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - static_cast<long>(e) * weights[pos]);
    }
    cur[pos] = 0;
  };
  if (target >= 0) rec(rec, 0, target);
}

}  // namespace qcoh
