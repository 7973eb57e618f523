#include "eisenbox/lp.hpp"

#include "eisenbox/error.hpp"

namespace eisenbox {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InputError("bad_lp", "right-hand side length differs from row count");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("bad_lp", "ragged constraint matrix");

  // Tableau over [x | artificials | rhs]; the objective row is the sum of
  // the artificials expressed in the nonbasic variables.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = sign * b[i];
    basis[i] = n + i;
  }
  std::vector<Rational> obj(cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < n || j == cols) obj[j] -= t[i][j];

  for (;;) {
    // Bland: smallest index with negative reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw MathError("internal", "phase-1 objective unbounded");
    Rational p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = obj[enter];
    for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  if (obj[cols] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][cols];
  return x;
}

}  // namespace eisenbox
