#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace birch {

using Block = std::vector<std::size_t>;

/// An unordered partition of point indices. Stored canonically: every block
/// sorted ascending, blocks ordered by their smallest element. Two partitions
/// compare equal iff they describe the same unordered set of blocks.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput on an empty block or an index used twice.
  explicit Partition(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t element_count() const;
  /// Block sizes in ascending order.
  std::vector<std::size_t> block_sizes() const;
  /// True iff the union of the blocks is exactly {0, ..., n-1}.
  bool covers(std::size_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// "{0,1,2}|{3,4,5}"
std::string to_string(const Partition& p);

}  // namespace birch
