#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoh/exact.hpp"
#include "qcoh/multi_index.hpp"

namespace qcoh {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Variable layout of a GW series: p divisor variables (entering only via
/// e^{d.y}, never as explicit exponents) and m-p non-divisor variables.
struct SeriesShape {
  std::vector<int> c1_weights;  // c1-degree of each effective generator, size p
  int nondivisor_count = 0;

  int divisor_count() const { return static_cast<int>(c1_weights.size()); }
  bool operator==(const SeriesShape&) const = default;
};

/// Hard truncation: keys with c1(d) > max_c1 or |n| > max_insertions are
/// never stored. Everything inside the bounds is exact; arithmetic works
/// modulo the truncation ideal.
struct Truncation {
  int max_c1 = 0;
  int max_insertions = 0;

  Truncation meet(const Truncation& o) const {
    return {std::min(max_c1, o.max_c1), std::min(max_insertions, o.max_insertions)};
  }
  bool operator==(const Truncation&) const = default;
};

struct SeriesKey {
  MultiIndex degree;      // d: coordinates of beta in the effective basis
  MultiIndex insertions;  // n: exponents of the non-divisor variables

  auto operator<=>(const SeriesKey&) const = default;
  bool operator==(const SeriesKey&) const = default;
};

/// Identifies a series variable. Divisor variables act through e^{d_i y_i}.
struct SeriesVar {
  enum class Kind { divisor, nondivisor };
  Kind kind;
  int index;

  static SeriesVar divisor(int i) { return {Kind::divisor, i}; }
  static SeriesVar nondivisor(int j) { return {Kind::nondivisor, j}; }
};

/// Truncated multivariate series
///   sum_{d,n} a(d,n) e^{d.y_div} prod_j y_j^{n_j} / n_j!
/// in divided-power convention: the stored value a(d,n) is the invariant
/// itself, not the monomial coefficient.
class GWSeries {
 public:
  using Terms = std::map<SeriesKey, Rational>;

  GWSeries(SeriesShape shape, Truncation bounds);

  static GWSeries constant(SeriesShape shape, Truncation bounds, const Rational& value);

  const SeriesShape& shape() const { return shape_; }
  const Truncation& bounds() const { return bounds_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  long c1_degree(const MultiIndex& d) const { return d.weighted(shape_.c1_weights); }
  bool in_bounds(const SeriesKey& key) const;

  Rational coefficient(const SeriesKey& key) const;

  /// Adds `value` at `key`. Out-of-bound keys are dropped silently; zero
  /// results are erased.
  void add(const SeriesKey& key, const Rational& value);

  GWSeries& operator+=(const GWSeries& o);
  GWSeries& operator-=(const GWSeries& o);
  GWSeries& operator*=(const Rational& s);

  friend GWSeries operator+(GWSeries a, const GWSeries& b) { return a += b; }
  friend GWSeries operator-(GWSeries a, const GWSeries& b) { return a -= b; }
  friend GWSeries operator*(GWSeries a, const Rational& s) { return a *= s; }
  friend GWSeries operator*(const Rational& s, GWSeries a) { return a *= s; }

  /// Keeps only the keys whose curve class equals `d`.
  GWSeries restricted_to_degree(const MultiIndex& d) const;

  bool operator==(const GWSeries& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  void require_same_shape(const GWSeries& o) const;

  SeriesShape shape_;
  Truncation bounds_;
  Terms terms_;
};

/// Divided-power product, truncated to the meet of both bounds.
GWSeries series_mul(const GWSeries& a, const GWSeries& b);

/// Partial derivative. Divisor variable i multiplies each coefficient by
/// d_i; non-divisor variable j shifts its exponent down by one (and lowers
/// the insertion bound by one, since the top layer is no longer known).
GWSeries series_partial(const GWSeries& a, SeriesVar var);

}  // namespace qcoh
