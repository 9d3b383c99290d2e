#include "nilhoro/linalg.hpp"

#include <cstddef>

namespace nilhoro {

namespace {

// Row-echelon elimination in place; returns pivot columns.
std::vector<std::size_t> eliminate(RatMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rat lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(eliminate(m, m.front().size()).size());
}

std::optional<RatVec> rat_solve(RatMat a, RatVec rhs) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) a[r].push_back(rhs[r]);
  const auto pivots = eliminate(a, n);
  if (pivots.size() < n) return std::nullopt;
  RatVec f(n);
  for (std::size_t r = 0; r < n; ++r) f[pivots[r]] = a[r][n];
  return f;
}

std::optional<RatVec> rat_null_vector(RatMat a, std::size_t cols) {
  const auto pivots = eliminate(a, cols);
  if (pivots.size() == cols) return std::nullopt;
  // Pick the first free column and back-substitute.
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  RatVec f(cols, Rat(0));
  f[free_col] = 1;
  // Each surviving row has a unit pivot; cancel its free-column entry.
  for (std::size_t r = 0; r < pivots.size(); ++r) f[pivots[r]] = -a[r][free_col];
  return f;
}

}  // namespace nilhoro
