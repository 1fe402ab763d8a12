#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "birch/kernel.hpp"
#include "birch/partition.hpp"

namespace birch::detail {

/// Index subsets as bitmasks; configurations are capped at 64 points.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxPoints = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline Mask mask_of(std::span<const std::size_t> indices) {
  Mask m = 0;
  for (std::size_t i : indices) m |= bit(i);
  return m;
}

inline Block indices_of(Mask m) {
  Block out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline std::vector<Point> gather(const Configuration& X, Mask m) {
  std::vector<Point> out;
  for (std::size_t i : indices_of(m)) out.push_back(X[i]);
  return out;
}

/// Candidate blocks bucketed by their smallest index.
class BlockIndex {
 public:
  BlockIndex() : by_min_(kMaxPoints) {}

  void add(Mask block) { by_min_[std::countr_zero(block)].push_back(block); }
  const std::vector<Mask>& starting_at(std::size_t i) const { return by_min_[i]; }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& v : by_min_) n += v.size();
    return n;
  }

 private:
  std::vector<std::vector<Mask>> by_min_;
};

/// Visits every partition of `universe` into blocks from `index`. The block
/// holding the smallest uncovered index is always chosen next, so each
/// unordered partition is produced exactly once and no dedup set is needed.
template <class Visit>
void for_each_block_partition(Mask universe, const BlockIndex& index, Visit&& visit) {
  std::vector<Mask> chosen;
  auto recurse = [&](auto&& self, Mask remaining) -> void {
    if (remaining == 0) {
      visit(std::span<const Mask>(chosen));
      return;
    }
    const auto anchor = static_cast<std::size_t>(std::countr_zero(remaining));
    for (Mask block : index.starting_at(anchor)) {
      if ((block & remaining) != block) continue;
      chosen.push_back(block);
      self(self, remaining & ~block);
      chosen.pop_back();
    }
  };
  recurse(recurse, universe);
}

inline Partition to_partition(std::span<const Mask> blocks, std::span<const Mask> extra = {}) {
  std::vector<Block> out;
  out.reserve(blocks.size() + extra.size());
  for (Mask m : blocks) out.push_back(indices_of(m));
  for (Mask m : extra) out.push_back(indices_of(m));
  return Partition(std::move(out));
}

/// (d+1)-subsets of `pool` whose simplex contains x. With `closed` set,
/// boundary hits count as contained.
BlockIndex blocks_containing(const Configuration& X, Mask pool, const Point& x, bool closed);

/// All (d+1)-subsets of `pool`, no geometric filter.
BlockIndex all_blocks(const Configuration& X, Mask pool);

}  // namespace birch::detail
