#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace birch::detail {

/// Calls fn(span of r ascending indices) for every r-subset of {0..n-1} in
/// lexicographic order. Stops early if fn returns false.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace birch::detail
