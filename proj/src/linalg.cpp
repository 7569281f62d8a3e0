#include "plk/linalg.hpp"

#include "plk/errors.hpp"

namespace plk {

Echelon row_reduce(RationalMatrix m, int cols) {
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) throw InputError("row_reduce: ragged matrix");
  }
  Echelon e;
  std::size_t lead = 0;
  for (int c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[lead]);
    const Rational inv = 1 / m[lead][c];
    for (int j = c; j < cols; ++j) m[lead][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == lead || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[lead][j];
    }
    e.pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  e.rows = std::move(m);
  return e;
}

int rank(const RationalMatrix& m, int cols) {
  return static_cast<int>(row_reduce(m, cols).pivots.size());
}

RationalMatrix nullspace(const RationalMatrix& m, int cols) {
  const Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalRow x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace plk
