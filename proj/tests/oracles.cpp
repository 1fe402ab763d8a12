#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace birch::oracle {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

namespace {

// Gauss-Jordan on an augmented matrix; empty result when singular.
std::vector<Rational> gauss_jordan(Matrix aug) {
  const std::size_t n = aug.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c].is_zero()) ++p;
    if (p == n) return {};
    std::swap(aug[p], aug[c]);
    const Rational piv = aug[c][c];
    for (auto& v : aug[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c].is_zero()) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = 0; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace

std::vector<Rational> barycentric_of_origin(const std::vector<Point>& simplex) {
  const std::size_t n = simplex.size();
  const std::size_t d = n - 1;
  Matrix aug(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < n; ++j) aug[r][j] = simplex[j][r];
  }
  for (std::size_t j = 0; j < n; ++j) aug[d][j] = 1;
  aug[d][n] = 1;
  return gauss_jordan(std::move(aug));
}

bool lp_contains_origin(const std::vector<Point>& points) {
  const std::size_t d = points.front().dim();
  Matrix a(d + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t r = 0; r < d; ++r) a[r][j] = points[j][r];
    a[d][j] = 1;
  }
  b[d] = 1;
  return linear_feasible(a, b, std::vector<bool>(points.size(), true));
}

std::vector<Partition> all_partitions(std::size_t n, std::size_t blocks) {
  // Restricted growth strings: label[i] <= max(label[0..i-1]) + 1.
  std::vector<Partition> out;
  std::vector<std::size_t> label(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (used + (n - i) < blocks) return;
    if (i == n) {
      if (used != blocks) return;
      std::vector<Block> bs(blocks);
      for (std::size_t j = 0; j < n; ++j) bs[label[j]].push_back(j);
      out.emplace_back(std::move(bs));
      return;
    }
    for (std::size_t l = 0; l <= used && l < blocks; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  if (n > 0) rec(0, 0);
  return out;
}

std::uint64_t naive_birch_count(const Configuration& X) {
  const std::size_t k = X.size() / (X.dim() + 1);
  std::uint64_t count = 0;
  for (const auto& p : all_partitions(X.size(), k)) {
    bool ok = true;
    for (const auto& b : p.blocks()) {
      if (b.size() != X.dim() + 1) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < p.blocks().size(); ++i) {
      std::vector<Point> pts;
      for (std::size_t idx : p.blocks()[i]) pts.push_back(X[idx]);
      ok = lp_contains_origin(pts);
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<Partition> naive_tverberg_partitions(const Configuration& X, std::size_t q) {
  const std::size_t d = X.dim();
  const std::size_t n = X.size();
  std::vector<Partition> out;
  for (const auto& p : all_partitions(n, q)) {
    // Variables: x (free, d of them) then one weight per point.
    Matrix a;
    std::vector<Rational> b;
    std::vector<bool> nonneg(d, false);
    nonneg.resize(d + n, true);
    for (const auto& blk : p.blocks()) {
      std::vector<Rational> sum(d + n);
      for (std::size_t idx : blk) sum[d + idx] = 1;
      a.push_back(std::move(sum));
      b.emplace_back(1);
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<Rational> row(d + n);
        row[c] = -1;
        for (std::size_t idx : blk) row[d + idx] = X[idx][c];
        a.push_back(std::move(row));
        b.emplace_back(0);
      }
    }
    if (linear_feasible(a, b, nonneg)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_force_feasible(const Matrix& a, const std::vector<Rational>& b,
                          const std::vector<bool>& nonneg) {
  const std::size_t m = a.size();
  // Split free variables into two nonnegative columns.
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < nonneg.size(); ++j) {
    std::vector<Rational> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = a[i][j];
    cols.push_back(c);
    if (!nonneg[j]) {
      for (auto& v : c) v = -v;
      cols.push_back(c);
    }
  }
  if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return v.is_zero(); })) return true;

  // A feasible system has a basic feasible solution: a linearly independent
  // column set B with A_B y = b, y >= 0.
  const std::size_t nc = cols.size();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << nc); ++subset) {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < nc; ++j) {
      if (subset >> j & 1) chosen.push_back(j);
    }
    if (chosen.size() > m) continue;
    Matrix basis(m, std::vector<Rational>(chosen.size()));
    Matrix aug(m, std::vector<Rational>(chosen.size() + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < chosen.size(); ++j) basis[i][j] = aug[i][j] = cols[chosen[j]][i];
      aug[i][chosen.size()] = b[i];
    }
    if (rank(basis) != chosen.size() || rank(aug) != chosen.size()) continue;
    // Solve via normal equations (B^T B) y = B^T b; exact since b is in range(B).
    const std::size_t k = chosen.size();
    Matrix ntn(k, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < m; ++i) ntn[r][c] += basis[i][r] * basis[i][c];
      }
      for (std::size_t i = 0; i < m; ++i) ntn[r][k] += basis[i][r] * b[i];
    }
    const auto y = gauss_jordan(std::move(ntn));
    if (!y.empty() && std::all_of(y.begin(), y.end(), [](const Rational& v) { return v.sign() >= 0; })) {
      return true;
    }
  }
  return false;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t d, int bound) {
  while (true) {
    Matrix m(d, std::vector<Rational>(d));
    for (auto& row : m) {
      for (auto& v : row) v = Rational(uniform(rng, -bound, bound));
    }
    if (!determinant(m).is_zero()) return m;
  }
}

Configuration transform(const Configuration& X, const Matrix& m) {
  std::vector<Point> pts;
  for (const auto& p : X.points()) {
    std::vector<Rational> c(X.dim());
    for (std::size_t r = 0; r < X.dim(); ++r) {
      for (std::size_t j = 0; j < X.dim(); ++j) c[r] += m[r][j] * p[j];
    }
    pts.emplace_back(std::move(c));
  }
  return Configuration(X.dim(), std::move(pts), X.label());
}

}  // namespace birch::oracle
