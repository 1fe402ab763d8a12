#include "birch/birch.hpp"

#include <algorithm>

#include "birch/detail/combinations.hpp"
#include "birch/detail/enumeration.hpp"

namespace birch {

namespace detail {

BlockIndex blocks_containing(const Configuration& X, Mask pool, const Point& x, bool closed) {
  const Block members = indices_of(pool);
  const std::size_t size = X.dim() + 1;
  BlockIndex index;
  std::vector<Point> simplex(size);
  for_each_combination(members.size(), size, [&](std::span<const std::size_t> s) {
    Mask m = 0;
    for (std::size_t i = 0; i < size; ++i) {
      simplex[i] = X[members[s[i]]];
      m |= bit(members[s[i]]);
    }
    const Containment c = locate_in_simplex(simplex, x);
    if (c == Containment::Interior || (closed && c == Containment::Boundary)) index.add(m);
    return true;
  });
  return index;
}

BlockIndex all_blocks(const Configuration& X, Mask pool) {
  const Block members = indices_of(pool);
  BlockIndex index;
  for_each_combination(members.size(), X.dim() + 1, [&](std::span<const std::size_t> s) {
    Mask m = 0;
    for (std::size_t i : s) m |= bit(members[i]);
    index.add(m);
    return true;
  });
  return index;
}

}  // namespace detail

namespace {

using detail::Mask;

void validate_birch_input(const Configuration& X) {
  const std::size_t block = X.dim() + 1;
  if (X.size() == 0 || X.size() % block != 0) {
    throw SizeMismatch("need k(d+1) points with k >= 1; got " + std::to_string(X.size()) +
                       " points in dimension " + std::to_string(X.dim()));
  }
  if (X.size() > detail::kMaxPoints) {
    throw InvalidInput("at most " + std::to_string(detail::kMaxPoints) + " points supported");
  }
  if (!is_general_position(X, Point::origin(X.dim()))) {
    throw NotGeneralPosition("configuration is not in general position with respect to the origin");
  }
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Under validated general position the origin is never on a boundary, so the
// closed and open filters agree; the open one is used to match the contract.
detail::BlockIndex origin_blocks(const Configuration& X) {
  return detail::blocks_containing(X, full_mask(X.size()), Point::origin(X.dim()), false);
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw InvalidInput(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Block> valid_blocks(const Configuration& X) {
  validate_birch_input(X);
  const detail::BlockIndex index = origin_blocks(X);
  std::vector<Block> out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (Mask m : index.starting_at(i)) out.push_back(detail::indices_of(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BirchReport count_birch(const Configuration& X, bool collect_witnesses) {
  const auto start = std::chrono::steady_clock::now();
  validate_birch_input(X);

  BirchReport report;
  report.k = X.size() / (X.dim() + 1);
  if (collect_witnesses) report.witnesses.emplace();

  const detail::BlockIndex index = origin_blocks(X);
  detail::for_each_block_partition(full_mask(X.size()), index, [&](std::span<const Mask> blocks) {
    ++report.count;
    if (collect_witnesses) report.witnesses->push_back(detail::to_partition(blocks));
  });

  if (report.k >= 2 && report.count % 2 != 0) {
    throw InconsistencyDetected("odd Birch partition count " + std::to_string(report.count) +
                                " for k = " + std::to_string(report.k));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

int check_pair_lemma(const Configuration& Y) {
  if (Y.size() != Y.dim() + 2) {
    throw SizeMismatch("pair lemma needs d+2 = " + std::to_string(Y.dim() + 2) + " points, got " +
                       std::to_string(Y.size()));
  }
  if (!is_general_position(Y, Point::origin(Y.dim()))) {
    throw NotGeneralPosition("point set is not in general position with respect to the origin");
  }
  int hits = 0;
  std::vector<Point> simplex(Y.dim() + 1);
  detail::for_each_combination(Y.size(), Y.dim() + 1, [&](std::span<const std::size_t> s) {
    for (std::size_t i = 0; i < s.size(); ++i) simplex[i] = Y[s[i]];
    if (simplex_contains_origin(simplex)) ++hits;
    return true;
  });
  if (hits != 0 && hits != 2) {
    throw InconsistencyDetected(std::to_string(hits) +
                                " simplices of a (d+2)-point set contain the origin");
  }
  return hits;
}

}  // namespace birch
