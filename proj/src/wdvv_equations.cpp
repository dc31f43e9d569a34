#include <set>

#include "qcoh/gw_engine.hpp"

namespace qcoh {

std::string WdvvEquationId::str() const {
  return "A(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," +
         std::to_string(idx[3]) + ")";
}

std::pair<WdvvEquationId, int> wdvv_canonical_form(const std::array<int, 4>& idx) {
  const auto [i, j, k, l] = idx;
  if (i == k || j == l || i == 0 || j == 0 || k == 0 || l == 0) return {WdvvEquationId{idx, false}, 0};

  // orbit under the dihedral group generated by the two index symmetries
  std::set<std::pair<std::array<int, 4>, int>> seen;
  std::vector<std::pair<std::array<int, 4>, int>> stack{{idx, 1}};
  while (!stack.empty()) {
    auto [cur, sign] = stack.back();
    stack.pop_back();
    if (!seen.insert({cur, sign}).second) continue;
    stack.push_back({{cur[2], cur[1], cur[0], cur[3]}, -sign});  // A(k,j,i,l) = -A(i,j,k,l)
    stack.push_back({{cur[3], cur[2], cur[1], cur[0]}, sign});   // A(l,k,j,i) = A(i,j,k,l)
  }
  auto best = *seen.begin();  // least quadruple; its sign relative to idx
  if (seen.count({best.first, -best.second})) return {WdvvEquationId{idx, false}, 0};  // A = -A
  return {WdvvEquationId{best.first, true}, best.second};
}

Int wdvv_count(long m) {
  if (m < 1) throw std::invalid_argument("wdvv_count: m must be >= 1");
  Int mm = m;
  Int num = mm * (mm - 1) * (mm * mm - mm + 2);
  return num / 8;
}

Int wdvv_count_binomial(long m) {
  return 3 * binomial_z(m, 4) + Int(m) * binomial_z(m - 1, 2) + binomial_z(m, 2);
}

std::vector<WdvvEquationId> wdvv_canonical_equations(int m) {
  if (m < 1) throw std::invalid_argument("wdvv_canonical_equations: m must be >= 1");
  std::set<WdvvEquationId> reps;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          auto [rep, sign] = wdvv_canonical_form({i, j, k, l});
          if (sign != 0) reps.insert(rep);
        }
  return {reps.begin(), reps.end()};
}

}  // namespace qcoh
