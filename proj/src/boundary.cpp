#include "qcoh/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qcoh/gw_engine.hpp"

namespace qcoh {

namespace {

bool has(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::string marks_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// All classes 0 <= beta1 <= beta componentwise, lexicographic.
std::vector<EffectiveClass> sub_classes(const EffectiveClass& beta) {
  std::vector<EffectiveClass> out;
  EffectiveClass cur(beta.arity());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == beta.arity()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= beta[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

BoundaryDatum BoundaryDatum::canonical() const {
  if (std::tie(b, beta2) < std::tie(a, beta1)) return {b, a, beta2, beta1};
  return *this;
}

BoundaryDatum BoundaryDatum::oriented(int mark) const {
  if (has(b, mark)) return {b, a, beta2, beta1};
  return *this;
}

bool BoundaryDatum::contains_a(int mark) const { return has(a, mark); }
bool BoundaryDatum::contains_b(int mark) const { return has(b, mark); }

std::string BoundaryDatum::str() const {
  return "D(" + marks_str(a) + "," + marks_str(b) + ";" + beta1.str() + "," + beta2.str() + ")";
}

bool is_valid_datum(const BoundaryDatum& datum, int n, const EffectiveClass& beta) {
  if (datum.beta1.arity() != beta.arity() || datum.beta2.arity() != beta.arity()) return false;
  if (!datum.beta1.non_negative() || !datum.beta2.non_negative()) return false;
  if (datum.beta1 + datum.beta2 != beta) return false;
  std::vector<int> all;
  all.insert(all.end(), datum.a.begin(), datum.a.end());
  all.insert(all.end(), datum.b.begin(), datum.b.end());
  std::sort(all.begin(), all.end());
  if (static_cast<int>(all.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (all[static_cast<std::size_t>(i)] != i + 1) return false;
  if (!std::is_sorted(datum.a.begin(), datum.a.end()) || !std::is_sorted(datum.b.begin(), datum.b.end())) return false;
  if (datum.beta1.total() == 0 && datum.a.size() < 2) return false;
  if (datum.beta2.total() == 0 && datum.b.size() < 2) return false;
  return true;
}

std::vector<BoundaryDatum> enumerate_boundary(int n, const EffectiveClass& beta) {
  if (n < 0) throw std::invalid_argument("enumerate_boundary: n must be >= 0");
  if (n > 30) throw std::invalid_argument("enumerate_boundary: n too large");
  if (!beta.non_negative()) throw std::invalid_argument("enumerate_boundary: beta is not effective");
  const auto splits = sub_classes(beta);
  std::set<BoundaryDatum> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    BoundaryDatum base;
    for (int i = 0; i < n; ++i) ((mask >> i) & 1UL ? base.a : base.b).push_back(i + 1);
    for (const auto& b1 : splits) {
      BoundaryDatum datum = base;
      datum.beta1 = b1;
      datum.beta2 = beta - b1;
      if (datum.beta1.total() == 0 && datum.a.size() < 2) continue;
      if (datum.beta2.total() == 0 && datum.b.size() < 2) continue;
      out.insert(datum.canonical());
    }
  }
  return {out.begin(), out.end()};
}

std::vector<BoundaryDatum> d_sum(int n, const EffectiveClass& beta, int i, int j, int k, int l) {
  for (int x : {i, j, k, l})
    if (x < 1 || x > n) throw std::invalid_argument("d_sum: mark " + std::to_string(x) + " outside 1.." + std::to_string(n));
  if (i == j || i == k || i == l || j == k || j == l || k == l)
    throw std::invalid_argument("d_sum: marks must be distinct");
  if (!beta.non_negative()) throw std::invalid_argument("d_sum: beta is not effective");
  std::vector<int> free;
  for (int x = 1; x <= n; ++x)
    if (x != i && x != j && x != k && x != l) free.push_back(x);
  const auto splits = sub_classes(beta);
  std::vector<BoundaryDatum> out;
  // both sides already carry two marks, so every split is allowed
  for (unsigned long mask = 0; mask < (1UL << free.size()); ++mask) {
    BoundaryDatum base;
    base.a = {i, j};
    base.b = {k, l};
    for (std::size_t x = 0; x < free.size(); ++x) ((mask >> x) & 1UL ? base.a : base.b).push_back(free[x]);
    std::sort(base.a.begin(), base.a.end());
    std::sort(base.b.begin(), base.b.end());
    for (const auto& b1 : splits) {
      base.beta1 = b1;
      base.beta2 = beta - b1;
      out.push_back(base);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntersectionCounts intersection_counts(int d, const GWTable& table) {
  if (d < 2) throw std::invalid_argument("intersection_counts: d must be >= 2");
  const FanoModel& model = table.model();
  if (model.dimension() != 2 || model.m() != 2 || model.divisor_count() != 1)
    throw std::invalid_argument("intersection_counts: needs a table on the projective plane");

  const int n = 3 * d;
  const EffectiveClass beta{d};
  // marks 1,2 on lines, all others on points
  auto cls = [](int mark) { return mark <= 2 ? 1 : 2; };

  auto evaluate = [&](int q, int r, int s, int t, std::vector<IntersectionItem>& items) -> Int {
    std::map<std::pair<int, int>, std::size_t> groups;
    Int total = 0;
    for (const auto& datum : d_sum(n, beta, q, r, s, t)) {
      const int d1 = datum.beta1[0];
      const int side_points = static_cast<int>(datum.a.size()) - 2;
      auto [it, fresh] = groups.try_emplace({d1, side_points}, items.size());
      if (fresh) {
        std::vector<int> ca, cb;
        for (int x : datum.a) ca.push_back(cls(x));
        for (int x : datum.b) cb.push_back(cls(x));
        Rational value = 0;
        for (int e = 0; e <= 2; ++e) {
          for (int f = 0; f <= 2; ++f) {
            const Rational& gef = model.inverse_pairing(e, f);
            if (gef == 0) continue;
            ca.push_back(e);
            cb.push_back(f);
            value += gef * gw_invariant(model, table, datum.beta1, ca) * gw_invariant(model, table, datum.beta2, cb);
            ca.pop_back();
            cb.pop_back();
          }
        }
        items.push_back({d1, side_points, Int(0), to_int(value, "boundary contribution")});
      }
      IntersectionItem& item = items[it->second];
      item.partitions += 1;
      total += item.contribution;
    }
    std::erase_if(items, [](const IntersectionItem& x) { return x.contribution == 0; });
    std::sort(items.begin(), items.end(), [](const IntersectionItem& x, const IntersectionItem& y) {
      return std::pair(x.d1, x.side_points) < std::pair(y.d1, y.side_points);
    });
    return total;
  };

  IntersectionCounts out;
  out.d = d;
  out.lhs = evaluate(1, 2, 3, 4, out.lhs_items);
  out.rhs = evaluate(1, 3, 2, 4, out.rhs_items);

  auto N = [&](int e) -> const Int& { return table.at(EffectiveClass{e}, MultiIndex{3 * e - 1}); };
  out.lhs_formula = N(d);
  out.rhs_formula = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    const Int nn = N(d1) * N(d2);
    out.lhs_formula += nn * Int(d1 * d1 * d1 * d2) * binomial_z(3 * d - 4, 3 * d1 - 1);
    out.rhs_formula += nn * Int(d1 * d1 * d2 * d2) * binomial_z(3 * d - 4, 3 * d1 - 2);
  }
  return out;
}

}  // namespace qcoh
