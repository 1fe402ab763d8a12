#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "birch/errors.hpp"
#include "birch/rational.hpp"

namespace birch {

/// A point of R^d with exact coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  /// The origin of R^dim.
  static Point origin(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  Point operator-() const;
  Point scaled(const Rational& factor) const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const Point& p);

/// An ordered list of distinct points sharing one ambient dimension.
class Configuration {
 public:
  Configuration() = default;
  /// Throws InvalidInput if dim == 0, a point has the wrong length, or two
  /// points coincide.
  Configuration(std::size_t dim, std::vector<Point> points, std::string label = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::string& label() const { return label_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  std::string label_;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign sign_of(int s) {
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}
constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
const char* to_string(Sign s);

using Matrix = std::vector<std::vector<Rational>>;

// Exact linear algebra helpers shared by the predicates and the counters.

/// Determinant of a square matrix by fraction-exact elimination.
Rational determinant(Matrix m);
/// Rank of an arbitrary rectangular matrix.
std::size_t rank(Matrix m);
/// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// Sign of det [p_0 1; p_1 1; ...; p_d 1] for d+1 points of R^d.
/// Zero exactly when the points are affinely dependent.
Sign orientation(std::span<const Point> simplex);

/// True iff every subset of at most d+1 points of X (plus `p` if given) is
/// affinely independent.
bool is_general_position(const Configuration& X, const std::optional<Point>& p = std::nullopt);
bool is_general_position(std::span<const Point> points, std::size_t dim);

/// Where a point lies relative to a full-dimensional simplex.
enum class Containment { Outside, Boundary, Interior };

/// Throws DegenerateSimplex if the simplex is flat.
Containment locate_in_simplex(std::span<const Point> simplex, const Point& x);

/// Open-interior containment of the origin in conv(S) for d+1 points of R^d.
/// Throws DegenerateSimplex if S is flat and NotGeneralPosition if the origin
/// sits on the boundary.
bool simplex_contains_origin(std::span<const Point> simplex);

/// True iff w is a strictly positive combination of the d generators.
/// Throws SingularGenerators if they are linearly dependent.
bool cone_contains(const Point& w, std::span<const Point> generators);

/// Decides whether {A x = b, x_i >= 0 for every flagged i} has a real solution.
/// Exact two-phase simplex (phase one only) with the least-index pivoting
/// rule, so it always terminates.
bool linear_feasible(const Matrix& equality_rows, const std::vector<Rational>& rhs,
                     const std::vector<bool>& nonneg);

/// Shared validation used by the predicates.
void require_dim(std::span<const Point> points, std::size_t dim, const char* what);

}  // namespace birch
