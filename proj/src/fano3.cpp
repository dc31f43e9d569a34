#include <map>
#include <set>

#include "qcoh/gw_engine.hpp"

namespace qcoh {

namespace {

struct Fano3Params {
  int k;  // a + 2b = k d
  int c;  // T1 u T1 = c T2
  const char* name;
};

Fano3Params params(Fano3 s) { return s == Fano3::p3 ? Fano3Params{4, 1, "p3"} : Fano3Params{3, 2, "q3"}; }

using Pair = std::array<int, 2>;

/// Sum over splits (a1,b1)+(a2,b2) = (a,b) with both parts of positive degree.
template <class Term>
Int split_sum(const Fano3Params& fp, int a, int b, const std::function<Int(int, int)>& lower, Term term) {
  const int d = (a + 2 * b) / fp.k;
  Int total = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for (int b1 = 0; b1 <= b; ++b1) {
      const int a1 = fp.k * d1 - 2 * b1;
      if (a1 < 0 || a1 > a) continue;
      const int a2 = a - a1, b2 = b - b1;
      Int coeff = term(a1, b1, d1, d2);
      if (coeff == 0) continue;
      total += lower(a1, b1) * lower(a2, b2) * coeff;
    }
  }
  return total;
}

Int C(long n, long m) { return binomial_z(n, m); }

}  // namespace

Fano3 parse_fano3(const std::string& name) {
  if (name == "p3") return Fano3::p3;
  if (name == "q3") return Fano3::q3;
  throw std::invalid_argument("unknown space '" + name + "' (expected p3 or q3)");
}

std::vector<RecursionInstance> fano3_recursions(Fano3 space, int d, const std::function<Int(int, int)>& lower) {
  const Fano3Params fp = params(space);
  const int c = fp.c;
  std::vector<RecursionInstance> out;
  for (int b = 0; 2 * b <= fp.k * d; ++b) {
    const int a = fp.k * d - 2 * b;
    auto add = [&](int which, std::vector<std::pair<Pair, Int>> lhs, Int rhs) {
      out.push_back(RecursionInstance{which, a, b, std::move(lhs), std::move(rhs)});
    };
    if (a >= 3 && b >= 0) {
      add(1, {{{a - 2, b + 1}, Int(2 * d)}, {{a, b}, Int(-c)}},
          split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int d2) -> Int {
            return C(b, b1) * (Int(d1 * d1 * d1) * C(a - 3, a1) - Int(d1 * d1 * d2) * C(a - 3, a1 - 1));
          }));
    }
    if (a >= 2 && b >= 1) {
      add(2, {{{a - 2, b + 1}, Int(d)}, {{a, b}, Int(-c)}},
          split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int d2) -> Int {
            return C(a - 2, a1) * (Int(d1 * d1 * d1) * C(b - 1, b1) - Int(d1 * d1 * d2) * C(b - 1, b1 - 1));
          }));
    }
    if (a >= 1 && b >= 2) {
      add(3, {{{a, b}, Int(c)}}, split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int d2) -> Int {
            return Int(2 * d1 * d1 * d2) * C(a - 1, a1) * C(b - 2, b1 - 1) -
                   Int(d1 * d1 * d2) * C(a - 1, a1 - 1) * C(b - 2, b1) -
                   Int(d1 * d1 * d1) * C(a - 1, a1) * C(b - 2, b1);
          }));
    }
    if (a >= 3 && b >= 1) {
      add(4, {{{a - 2, b + 1}, Int(1)}}, split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int) -> Int {
            return Int(d1 * d1) * (C(a - 3, a1) * C(b - 1, b1 - 1) - C(a - 3, a1 - 1) * C(b - 1, b1));
          }));
    }
    if (a >= 2 && b >= 2) {
      add(5, {{{a - 2, b + 1}, Int(1)}}, split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int d2) -> Int {
            return Int(d1 * d2) * C(a - 2, a1 - 1) * C(b - 2, b1 - 1) -
                   Int(d1 * d2) * C(a - 2, a1 - 2) * C(b - 2, b1) +
                   Int(d1 * d1) * C(a - 2, a1) * C(b - 2, b1 - 1) -
                   Int(d1 * d1) * C(a - 2, a1 - 1) * C(b - 2, b1);
          }));
    }
    if (a >= 3 && b >= 2) {
      add(6, {}, split_sum(fp, a, b, lower, [&](int a1, int b1, int d1, int) -> Int {
            return Int(d1) * (C(a - 3, a1) * C(b - 2, b1 - 2) - 2 * C(a - 3, a1 - 1) * C(b - 2, b1 - 1) +
                              C(a - 3, a1 - 2) * C(b - 2, b1));
          }));
    }
  }
  return out;
}

namespace {

std::string pair_str(int a, int b) { return "N_{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

ModelPtr fano3_model(Fano3 space) { return builtin_model(params(space).name); }

}  // namespace

GWTable fano3_solve(Fano3 space, int d_max) {
  if (d_max < 1) throw std::invalid_argument("fano3_solve: d_max must be >= 1");
  const Fano3Params fp = params(space);
  std::map<Pair, Int> known;
  auto lower = [&](int a, int b) -> Int {
    auto it = known.find({a, b});
    if (it == known.end()) throw UnreachableError("fano3_solve: missing lower-degree value " + pair_str(a, b));
    return it->second;
  };

  for (int d = 1; d <= d_max; ++d) {
    std::map<Pair, Rational> current;
    if (d == 1) {
      // lines through two points on P3; N_{1,1} on Q3 is computed directly
      if (space == Fano3::p3) current[{0, 2}] = 1;
      else current[{1, 1}] = 1;
    }
    auto instances = fano3_recursions(space, d, lower);

    // propagate: any instance with exactly one undetermined number solves it
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& inst : instances) {
        const std::pair<Pair, Int>* open = nullptr;
        int n_open = 0;
        Rational rest = 0;
        for (const auto& term : inst.lhs) {
          auto it = current.find(term.first);
          if (it == current.end()) {
            ++n_open;
            open = &term;
          } else {
            rest += it->second * term.second;
          }
        }
        if (n_open != 1) continue;
        current[open->first] = (Rational(inst.rhs) - rest) / Rational(open->second);
        progress = true;
      }
    }

    for (int b = 0; 2 * b <= fp.k * d; ++b) {
      const int a = fp.k * d - 2 * b;
      if (!current.count({a, b}))
        throw UnreachableError(std::string("fano3_solve(") + fp.name + "): no recursion reaches " + pair_str(a, b) +
                               " at degree " + std::to_string(d));
    }
    for (const auto& inst : instances) {
      Rational lhs = 0;
      for (const auto& [key, coeff] : inst.lhs) lhs += current.at(key) * coeff;
      if (lhs != inst.rhs)
        throw InconsistencyError(std::string("fano3_solve(") + fp.name + "): recursion (" +
                                 std::to_string(inst.recursion) + ") at " + pair_str(inst.a, inst.b) +
                                 " gives " + lhs.get_str() + " != " + inst.rhs.get_str());
    }
    for (const auto& [key, v] : current) {
      Int iv = to_int(v, pair_str(key[0], key[1]));
      if (iv < 0) throw InconsistencyError("fano3_solve: negative value for " + pair_str(key[0], key[1]));
      known[key] = iv;
    }
  }

  GWTable table(fano3_model(space), fp.k * d_max);
  for (const auto& [key, v] : known) table.set(MultiIndex{(key[0] + 2 * key[1]) / fp.k}, MultiIndex{key[0], key[1]}, v);
  return table;
}

std::vector<RecursionInstance> fano3_violations(Fano3 space, const GWTable& table, int d_max) {
  auto value = [&](int a, int b) -> Int {
    const int k = params(space).k;
    return table.at(MultiIndex{(a + 2 * b) / k}, MultiIndex{a, b});
  };
  std::vector<RecursionInstance> bad;
  for (int d = 1; d <= d_max; ++d) {
    for (auto& inst : fano3_recursions(space, d, value)) {
      Int lhs = 0;
      for (const auto& [key, coeff] : inst.lhs) lhs += value(key[0], key[1]) * coeff;
      if (lhs != inst.rhs) bad.push_back(std::move(inst));
    }
  }
  return bad;
}

}  // namespace qcoh
