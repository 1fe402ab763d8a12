#pragma once

#include <cstdint>
#include <string>

#include "birch/kernel.hpp"

namespace birch {

enum class GeneratorKind { SierksmaBirch, SierksmaTverberg, LineBalanced, Random };

/// Parses "sierksma_birch", "sierksma_tverberg", "line_balanced", "random".
GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Random;
  std::size_t d = 2;
  /// Cluster size k for sierksma_birch and line_balanced, block count q for
  /// sierksma_tverberg. Unused by random.
  std::size_t k_or_q = 2;
  /// Number of points, random only.
  std::size_t n = 6;
  Rational epsilon = Rational(1, 20);
  std::uint64_t seed = 0;
  std::int64_t coord_bound = 64;
  /// random only: require general position together with the origin.
  bool wrt_origin = true;
};

/// Throws InvalidInput when a parameter is out of range.
void validate(const GeneratorSpec& spec);
Configuration generate(const GeneratorSpec& spec);

/// k tight clusters around each vertex of a simplex centred at the origin.
/// Requires d >= 1, k >= 1, 0 < epsilon < 1/10.
Configuration gen_sierksma_birch(std::size_t d, std::size_t k, const Rational& epsilon);

/// q-1 points near each simplex vertex plus one point just off the centre.
/// Requires d >= 1, q >= 2, 0 < epsilon < 1/10.
Configuration gen_sierksma_tverberg(std::size_t d, std::size_t q, const Rational& epsilon);

/// {-k, ..., -1, 1, ..., k} on the line.
Configuration gen_line_balanced(std::size_t k);

/// n lattice points drawn uniformly from [-coord_bound, coord_bound]^d,
/// redrawn until in general position (with the origin if wrt_origin).
/// Deterministic in its arguments. Throws ExhaustedRetries if the lattice is
/// too crowded to place a point.
Configuration gen_random(std::size_t d, std::size_t n, std::uint64_t seed,
                         std::int64_t coord_bound, bool wrt_origin);

}  // namespace birch
