#include "birch/configs.hpp"

#include <limits>
#include <random>

namespace birch {

namespace {

constexpr int kMaxAttempts = 64;
constexpr int kMaxDraws = 100000;

void check_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1, 10)) {
    throw InvalidInput("epsilon must lie in (0, 1/10), got " + epsilon.str());
  }
}

// Vertices of a simplex with barycentre at the origin: (d+1)e_j - 1 for
// j < d and -1 for the last one. Integer coordinates, all of magnitude >= 1.
std::vector<Point> centred_simplex(std::size_t d) {
  std::vector<Point> vertices;
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<Rational> c(d, Rational(-1));
    if (j < d) c[j] = Rational(static_cast<long>(d));
    vertices.emplace_back(std::move(c));
  }
  return vertices;
}

// Offset of point i in cluster j on the moment curve (t, t^2, ..., t^d).
// Distinct i give distinct |t| < 1, so every offset has sup-norm < epsilon.
Point cluster_offset(std::size_t d, std::size_t cluster_size, std::size_t j, std::size_t i,
                     int attempt, const Rational& epsilon) {
  const long spread = static_cast<long>(d) + 2 + attempt;
  const long num = static_cast<long>(i + 1) * spread + static_cast<long>(j) + 1;
  const long den = static_cast<long>(cluster_size + 1) * spread;
  Rational t(i % 2 == 0 ? num : -num, den);
  std::vector<Rational> c;
  Rational power = t;
  for (std::size_t m = 0; m < d; ++m) {
    c.push_back(epsilon * power);
    power *= t;
  }
  return Point(std::move(c));
}

std::vector<Point> clusters(std::size_t d, std::size_t cluster_size, int attempt,
                            const Rational& epsilon) {
  std::vector<Point> points;
  const auto vertices = centred_simplex(d);
  for (std::size_t j = 0; j <= d; ++j) {
    for (std::size_t i = 0; i < cluster_size; ++i) {
      const Point off = cluster_offset(d, cluster_size, j, i, attempt, epsilon);
      std::vector<Rational> c(d);
      for (std::size_t m = 0; m < d; ++m) c[m] = vertices[j][m] + off[m];
      points.emplace_back(std::move(c));
    }
  }
  return points;
}

Rational halved(const Rational& epsilon, int times) {
  return epsilon / pow(Rational(2), static_cast<unsigned>(times));
}

bool distinct(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) return false;
    }
  }
  return true;
}

// Uniform integer in [lo, hi] from raw mt19937_64 output. Avoids
// std::uniform_int_distribution, whose output differs between standard
// libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "sierksma_birch") return GeneratorKind::SierksmaBirch;
  if (name == "sierksma_tverberg") return GeneratorKind::SierksmaTverberg;
  if (name == "line_balanced") return GeneratorKind::LineBalanced;
  if (name == "random") return GeneratorKind::Random;
  throw InvalidInput("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::SierksmaBirch: return "sierksma_birch";
    case GeneratorKind::SierksmaTverberg: return "sierksma_tverberg";
    case GeneratorKind::LineBalanced: return "line_balanced";
    case GeneratorKind::Random: return "random";
  }
  return "?";
}

void validate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::SierksmaBirch:
    case GeneratorKind::SierksmaTverberg:
      check_epsilon(spec.epsilon);
      if (spec.d < 1) throw InvalidInput("d must be at least 1");
      if (spec.kind == GeneratorKind::SierksmaBirch && spec.k_or_q < 1) {
        throw InvalidInput("k must be at least 1");
      }
      if (spec.kind == GeneratorKind::SierksmaTverberg && spec.k_or_q < 2) {
        throw InvalidInput("q must be at least 2");
      }
      break;
    case GeneratorKind::LineBalanced:
      if (spec.k_or_q < 1) throw InvalidInput("k must be at least 1");
      break;
    case GeneratorKind::Random:
      if (spec.d < 1) throw InvalidInput("d must be at least 1");
      if (spec.n < spec.d + 1) throw InvalidInput("random configurations need n >= d+1");
      if (spec.coord_bound < static_cast<std::int64_t>(spec.n)) {
        throw InvalidInput("coord_bound must be at least n");
      }
      break;
  }
}

Configuration generate(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GeneratorKind::SierksmaBirch: return gen_sierksma_birch(spec.d, spec.k_or_q, spec.epsilon);
    case GeneratorKind::SierksmaTverberg:
      return gen_sierksma_tverberg(spec.d, spec.k_or_q, spec.epsilon);
    case GeneratorKind::LineBalanced: return gen_line_balanced(spec.k_or_q);
    case GeneratorKind::Random:
      return gen_random(spec.d, spec.n, spec.seed, spec.coord_bound, spec.wrt_origin);
  }
  throw InvalidInput("unknown generator kind");
}

Configuration gen_sierksma_birch(std::size_t d, std::size_t k, const Rational& epsilon) {
  if (d < 1 || k < 1) throw InvalidInput("gen_sierksma_birch needs d >= 1 and k >= 1");
  check_epsilon(epsilon);
  const std::string label = "sierksma_birch d=" + std::to_string(d) + " k=" + std::to_string(k);
  const Point origin = Point::origin(d);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pts = clusters(d, k, attempt, halved(epsilon, attempt));
    if (!distinct(pts)) continue;
    Configuration X(d, std::move(pts), label);
    if (is_general_position(X, origin)) return X;
  }
  throw ExhaustedRetries("no generic Sierksma configuration found for d=" + std::to_string(d) +
                         ", k=" + std::to_string(k));
}

Configuration gen_sierksma_tverberg(std::size_t d, std::size_t q, const Rational& epsilon) {
  if (d < 1 || q < 2) throw InvalidInput("gen_sierksma_tverberg needs d >= 1 and q >= 2");
  check_epsilon(epsilon);
  const std::string label = "sierksma_tverberg d=" + std::to_string(d) + " q=" + std::to_string(q);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Rational eps = halved(epsilon, attempt);
    auto pts = clusters(d, q - 1, attempt, eps);
    // Centre point: far smaller offset than the clusters, on a moment curve
    // parameter none of the cluster offsets use.
    std::vector<Rational> centre;
    const Rational t(1, static_cast<long>(2 * (d + 3 + attempt)) + 1);
    Rational power = t;
    for (std::size_t m = 0; m < d; ++m) {
      centre.push_back(eps * eps * power);
      power *= t;
    }
    pts.emplace_back(std::move(centre));
    if (!distinct(pts)) continue;
    Configuration X(d, std::move(pts), label);
    if (is_general_position(X)) return X;
  }
  throw ExhaustedRetries("no generic Sierksma configuration found for d=" + std::to_string(d) +
                         ", q=" + std::to_string(q));
}

Configuration gen_line_balanced(std::size_t k) {
  if (k < 1) throw InvalidInput("gen_line_balanced needs k >= 1");
  std::vector<Point> pts;
  for (long i = static_cast<long>(k); i >= 1; --i) pts.push_back(Point{Rational(-i)});
  for (long i = 1; i <= static_cast<long>(k); ++i) pts.push_back(Point{Rational(i)});
  return Configuration(1, std::move(pts), "line_balanced k=" + std::to_string(k));
}

Configuration gen_random(std::size_t d, std::size_t n, std::uint64_t seed,
                         std::int64_t coord_bound, bool wrt_origin) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Random;
  spec.d = d;
  spec.n = n;
  spec.coord_bound = coord_bound;
  validate(spec);

  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  if (wrt_origin) pts.push_back(Point::origin(d));
  const std::size_t first = pts.size();
  while (pts.size() - first < n) {
    bool placed = false;
    for (int tries = 0; tries < kMaxDraws && !placed; ++tries) {
      std::vector<Rational> c;
      for (std::size_t m = 0; m < d; ++m) c.emplace_back(draw(rng, -coord_bound, coord_bound));
      pts.emplace_back(std::move(c));
      if (distinct(pts) && is_general_position(pts, d)) {
        placed = true;
      } else {
        pts.pop_back();
      }
    }
    if (!placed) {
      throw ExhaustedRetries("could not place point " + std::to_string(pts.size() - first) +
                             " in general position; increase coord_bound");
    }
  }
  pts.erase(pts.begin(), pts.begin() + static_cast<long>(first));
  return Configuration(d, std::move(pts),
                       "random d=" + std::to_string(d) + " n=" + std::to_string(n) +
                           " seed=" + std::to_string(seed) +
                           " bound=" + std::to_string(coord_bound) +
                           (wrt_origin ? " wrt_origin" : ""));
}

}  // namespace birch
