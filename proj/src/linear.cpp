#include "qcoh/linear.hpp"

#include <stdexcept>

namespace qcoh {

std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

EliminationResult eliminate(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  EliminationResult res;
  res.solution.assign(cols, std::nullopt);
  std::vector<long> pivot_row_of(cols, -1);
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t piv = next;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[next]);
    std::swap(b[piv], b[next]);
    Rational inv = 1 / a[next][col];
    for (auto& v : a[next]) v *= inv;
    b[next] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[next][j];
      b[r] -= f * b[next];
    }
    pivot_row_of[col] = static_cast<long>(next);
    res.pivot_columns.push_back(col);
    ++next;
  }
  res.rank = next;
  for (std::size_t r = next; r < rows; ++r)
    if (b[r] != 0) res.consistent = false;
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row_of[col] < 0) continue;
    const auto& row = a[static_cast<std::size_t>(pivot_row_of[col])];
    bool depends_on_free = false;
    for (std::size_t j = 0; j < cols; ++j)
      if (j != col && row[j] != 0) depends_on_free = true;
    if (!depends_on_free) res.solution[col] = b[static_cast<std::size_t>(pivot_row_of[col])];
  }
  return res;
}

}  // namespace qcoh
