#include "birch/partition.hpp"

#include <algorithm>
#include <set>

#include "birch/errors.hpp"

namespace birch {

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::size_t> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidInput("partition contains an empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t i : b) {
      if (!seen.insert(i).second) {
        throw InvalidInput("index " + std::to_string(i) + " appears in two blocks");
      }
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

std::size_t Partition::element_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool Partition::covers(std::size_t n) const {
  if (element_count() != n) return false;
  for (const auto& b : blocks_) {
    if (b.back() >= n) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) out += '|';
    out += '{';
    const auto& b = p.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(b[j]);
    }
    out += '}';
  }
  return out;
}

}  // namespace birch
