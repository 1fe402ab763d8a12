#include <cstddef>
#include <vector>

#include "birch/kernel.hpp"

namespace birch {

// Phase one of the simplex method on {A x = b, x >= 0} with one artificial
// variable per row. Free variables are split as x = x+ - x-. Pivoting follows
// Bland's least-index rule for both the entering and leaving variable, which
// rules out cycling.
bool linear_feasible(const Matrix& equality_rows, const std::vector<Rational>& rhs,
                     const std::vector<bool>& nonneg) {
  const std::size_t m = equality_rows.size();
  if (rhs.size() != m) throw InvalidInput("linear_feasible: rhs length differs from row count");
  const std::size_t vars = nonneg.size();
  for (const auto& row : equality_rows) {
    if (row.size() != vars) throw InvalidInput("linear_feasible: ragged constraint matrix");
  }
  if (m == 0) return true;

  std::size_t structural = 0;
  for (bool nn : nonneg) structural += nn ? 1 : 2;
  const std::size_t cols = structural + m;

  Matrix t(m, std::vector<Rational>(cols));
  std::vector<Rational> b(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i].sign() < 0;
    std::size_t c = 0;
    for (std::size_t j = 0; j < vars; ++j) {
      const Rational& a = equality_rows[i][j];
      t[i][c++] = flip ? -a : a;
      if (!nonneg[j]) t[i][c++] = flip ? a : -a;
    }
    t[i][structural + i] = 1;
    b[i] = flip ? -rhs[i] : rhs[i];
    basis[i] = structural + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> reduced(cols);
  Rational objective;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < structural; ++j) reduced[j] -= t[i][j];
    objective += b[i];
  }

  while (objective.sign() != 0) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) return false;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rational ratio = b[i] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero, so some row qualifies.
    if (leave == m) throw InconsistencyDetected("phase-one simplex reported an unbounded ray");

    const Rational inv = t[leave][enter].inverse();
    for (std::size_t j = 0; j < cols; ++j) {
      if (!t[leave][j].is_zero()) t[leave][j] *= inv;
    }
    b[leave] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
      }
      b[i] -= f * b[leave];
    }
    if (!reduced[enter].is_zero()) {
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t[leave][j].is_zero()) reduced[j] -= f * t[leave][j];
      }
      objective += f * b[leave];
    }
    basis[leave] = enter;
  }
  return true;
}

}  // namespace birch
