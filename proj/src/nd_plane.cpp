#include "qcoh/gw_engine.hpp"

namespace qcoh {

std::vector<Int> plane_curve_numbers(int d_max) {
  if (d_max < 1) throw std::invalid_argument("nd_plane: d_max must be >= 1");
  std::vector<Int> n(static_cast<std::size_t>(d_max) + 1, Int(0));
  n[1] = 1;  // one line through two points
  for (long d = 2; d <= d_max; ++d) {
    Int sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
      long d2 = d - d1;
      Int term = d1 * d1 * d2 * d2 * binomial_z(3 * d - 4, 3 * d1 - 2) -
                 d1 * d1 * d1 * d2 * binomial_z(3 * d - 4, 3 * d1 - 1);
      sum += n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)] * term;
    }
    n[static_cast<std::size_t>(d)] = sum;
  }
  return n;
}

GWTable nd_plane(int d_max) {
  auto values = plane_curve_numbers(d_max);
  GWTable table(builtin_model("p2"), 3 * d_max);
  for (int d = 1; d <= d_max; ++d) table.set(MultiIndex{d}, MultiIndex{3 * d - 1}, values[static_cast<std::size_t>(d)]);
  return table;
}

}  // namespace qcoh
