#include "birch/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "birch/detail/combinations.hpp"

namespace birch {

Point Point::operator-() const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(-c);
  return Point(std::move(out));
}

Point Point::scaled(const Rational& factor) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c * factor);
  return Point(std::move(out));
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

Configuration::Configuration(std::size_t dim, std::vector<Point> points, std::string label)
    : dim_(dim), points_(std::move(points)), label_(std::move(label)) {
  if (dim_ == 0) throw InvalidInput("configuration dimension must be positive");
  require_dim(points_, dim_, "configuration");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw InvalidInput("points " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide at " + to_string(points_[i]));
      }
    }
  }
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

void require_dim(std::span<const Point> points, std::size_t dim, const char* what) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim) {
      throw InvalidInput(std::string(what) + ": point " + std::to_string(i) + " has length " +
                         std::to_string(points[i].dim()) + ", expected " + std::to_string(dim));
    }
  }
}

// ---------------------------------------------------------------------------
// Linear algebra

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] * inv;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = m[r][col].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const Rational f = m[i][col] * inv;
      for (std::size_t c = col; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = a[col][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// ---------------------------------------------------------------------------
// Predicates

Sign orientation(std::span<const Point> simplex) {
  if (simplex.empty()) throw InvalidInput("orientation of an empty point list");
  const std::size_t d = simplex.size() - 1;
  require_dim(simplex, d, "orientation");
  Matrix m(d + 1, std::vector<Rational>(d + 1, Rational(1)));
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = simplex[i][j];
  }
  return sign_of(determinant(std::move(m)).sign());
}

namespace {

bool affinely_independent(std::span<const Point> pts, std::span<const std::size_t> subset) {
  if (subset.size() <= 1) return true;
  const Point& base = pts[subset[0]];
  Matrix diffs;
  diffs.reserve(subset.size() - 1);
  for (std::size_t i = 1; i < subset.size(); ++i) {
    std::vector<Rational> row;
    row.reserve(base.dim());
    for (std::size_t c = 0; c < base.dim(); ++c) row.push_back(pts[subset[i]][c] - base[c]);
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs)) == subset.size() - 1;
}

}  // namespace

bool is_general_position(std::span<const Point> points, std::size_t dim) {
  require_dim(points, dim, "is_general_position");
  // Every subset of an affinely independent set is affinely independent, so
  // checking the largest admissible subsets suffices.
  const std::size_t m = std::min(dim + 1, points.size());
  const bool full = m == dim + 1;
  std::vector<Point> buf(m);
  return detail::for_each_combination(points.size(), m, [&](std::span<const std::size_t> s) {
    if (full) {
      for (std::size_t i = 0; i < m; ++i) buf[i] = points[s[i]];
      return orientation(buf) != Sign::Zero;
    }
    return affinely_independent(points, s);
  });
}

bool is_general_position(const Configuration& X, const std::optional<Point>& p) {
  if (!p) return is_general_position(X.points(), X.dim());
  if (p->dim() != X.dim()) {
    throw InvalidInput("point p has length " + std::to_string(p->dim()) + ", expected " +
                       std::to_string(X.dim()));
  }
  std::vector<Point> all = X.points();
  all.push_back(*p);
  return is_general_position(all, X.dim());
}

Containment locate_in_simplex(std::span<const Point> simplex, const Point& x) {
  const Sign whole = orientation(simplex);
  if (whole == Sign::Zero) throw DegenerateSimplex("simplex vertices are affinely dependent");
  if (x.dim() + 1 != simplex.size()) throw InvalidInput("query point has the wrong length");
  std::vector<Point> probe(simplex.begin(), simplex.end());
  bool boundary = false;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    probe[i] = x;
    const Sign s = orientation(probe);
    probe[i] = simplex[i];
    if (s == Sign::Zero) {
      boundary = true;
    } else if (s != whole) {
      return Containment::Outside;
    }
  }
  return boundary ? Containment::Boundary : Containment::Interior;
}

bool simplex_contains_origin(std::span<const Point> simplex) {
  if (simplex.empty()) throw InvalidInput("empty simplex");
  const Point origin = Point::origin(simplex[0].dim());
  switch (locate_in_simplex(simplex, origin)) {
    case Containment::Interior: return true;
    case Containment::Outside: return false;
    case Containment::Boundary: break;
  }
  throw NotGeneralPosition("origin lies on the boundary of the simplex");
}

bool cone_contains(const Point& w, std::span<const Point> generators) {
  const std::size_t d = w.dim();
  if (generators.size() != d) {
    throw InvalidInput("cone_contains needs " + std::to_string(d) + " generators, got " +
                       std::to_string(generators.size()));
  }
  require_dim(generators, d, "cone_contains");
  // Columns are the generators: sum_i lambda_i s_i = w.
  Matrix a(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t r = 0; r < d; ++r) a[r][i] = generators[i][r];
  }
  auto lambda = solve(std::move(a), w.coords());
  if (!lambda) throw SingularGenerators("cone generators are linearly dependent");
  return std::all_of(lambda->begin(), lambda->end(),
                     [](const Rational& l) { return l.sign() > 0; });
}

}  // namespace birch
