#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "birch/kernel.hpp"
#include "birch/partition.hpp"

namespace birch {

/// Result of counting the Birch partitions of a configuration for the origin.
struct BirchReport {
  std::uint64_t count = 0;
  std::size_t k = 0;
  /// Present only when requested; then it holds exactly `count` distinct
  /// canonical partitions.
  std::optional<std::vector<Partition>> witnesses;
  std::chrono::nanoseconds elapsed{0};
};

/// All (d+1)-index subsets whose simplex contains the origin, in lexicographic
/// order.
///
/// Requires |X| to be a positive multiple of d+1 (SizeMismatch otherwise) and
/// X together with the origin to be in general position (NotGeneralPosition).
std::vector<Block> valid_blocks(const Configuration& X);

/// Counts the unordered partitions of X into k = |X|/(d+1) blocks of d+1
/// points whose simplices all contain the origin.
///
/// Same preconditions as valid_blocks. For k >= 2 the count is always even on
/// valid input; an odd result raises InconsistencyDetected.
BirchReport count_birch(const Configuration& X, bool collect_witnesses = false);

/// Number of (d+1)-subsets of d+2 points whose simplex contains the origin.
/// Always 0 or 2 on valid input; anything else raises InconsistencyDetected.
int check_pair_lemma(const Configuration& Y);

/// n! as an exact 64-bit value. Throws InvalidInput when n > 20.
std::uint64_t factorial(std::size_t n);

}  // namespace birch
