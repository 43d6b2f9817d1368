#include "crnt/lp.hpp"

#include <vector>

namespace crnt {

std::optional<RatVec> find_nonnegative_solution(const RationalMatrix& a, const RatVec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionError("right-hand side has wrong length");
  if (m == 0) return RatVec(n, Rational(0));

  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t N = n + m;
  std::vector<RatVec> t(m, RatVec(N + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
    t[i][n + i] = 1;
    t[i][N] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  auto cost = [&](std::size_t j) { return j >= n ? 1 : 0; };

  RatVec z(N);
  for (;;) {
    for (std::size_t j = 0; j < N; ++j) {
      z[j] = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i]) != 0 && t[i][j] != 0) z[j] -= t[i][j];
    }
    std::size_t enter = N;
    for (std::size_t j = 0; j < N; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == N) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][N] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry somewhere; guard anyway.
    if (leave == m) break;

    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= N; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && t[i][N] != 0) return std::nullopt;
  RatVec x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][N];
  return x;
}

}  // namespace crnt
