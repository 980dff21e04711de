#include "sbo/linear.hpp"

#include <numeric>

namespace sbo {

std::vector<int> rref(RFMatrix& m, std::size_t cols, std::vector<int> order) {
  if (order.empty()) {
    order.resize(cols);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c : order) {
    if (row == m.size()) break;
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const RationalFunction inv = RationalFunction(1) / m[row][c];
    for (std::size_t j = 0; j < cols; ++j)
      if (!m[row][j].is_zero()) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (!m[row][j].is_zero()) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(RFMatrix m, std::size_t cols) { return rref(m, cols).size(); }

std::vector<std::vector<RationalFunction>> nullspace(RFMatrix m, std::size_t cols, std::vector<int> order) {
  auto pivots = rref(m, cols, std::move(order));
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<RationalFunction>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> v(cols);
    v[f] = RationalFunction(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sbo
