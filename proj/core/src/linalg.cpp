#include "linalg.hpp"

#include <cstddef>

#include "antinef/error.hpp"

namespace antinef::detail {

std::vector<Rat> solve_linear(RatMatrix a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail("SingularMatrix", "no pivot in column");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rat inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

bool lp_feasible(RatMatrix a, std::vector<Rat> b) {
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }
  // Tableau columns: n structural variables, then m artificials.
  const std::size_t total = n + m;
  RatMatrix t(m, std::vector<Rat>(total, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    basis[i] = n + i;
  }
  auto cost = [&](std::size_t col) { return col >= n ? Rat(1) : Rat(0); };

  for (;;) {
    // Reduced costs for the phase-one objective; Bland: smallest entering
    // index, smallest basis index on ratio ties.
    std::size_t enter = total;
    for (std::size_t j = 0; j < total && enter == total; ++j) {
      Rat r = cost(j);
      for (std::size_t i = 0; i < m; ++i) r -= cost(basis[i]) * t[i][j];
      if (r < 0) enter = j;
    }
    if (enter == total) break;  // optimal
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = b[i] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) fail("SingularMatrix", "unbounded phase-one objective");
    const Rat inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    b[leave] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
      b[i] -= f * b[leave];
    }
    basis[leave] = enter;
  }

  Rat objective(0);
  for (std::size_t i = 0; i < m; ++i) objective += cost(basis[i]) * b[i];
  return objective == 0;
}

}  // namespace antinef::detail
