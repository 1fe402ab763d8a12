#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birch/kernel.hpp"
#include "birch/partition.hpp"

namespace birch {

/// One singleton {vertex} plus q-1 full d-simplices that contain it.
struct TypeI {
  std::size_t vertex;
  friend bool operator==(const TypeI&, const TypeI&) = default;
};

/// k low-dimensional blocks (at most d points each) meeting in one point,
/// plus q-k full d-simplices containing that point.
struct TypeII {
  std::size_t k;
  friend bool operator==(const TypeII&, const TypeII&) = default;
};

using PartitionType = std::variant<TypeI, TypeII>;

/// Type of a partition with the Type I vertex forgotten; used as the key of
/// per-type breakdowns. `small_blocks` is 1 for Type I and k for Type II.
struct TypeSignature {
  std::size_t small_blocks = 1;

  bool is_type_one() const { return small_blocks == 1; }
  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;
};

TypeSignature signature(const PartitionType& t);
/// "I" or "II(k=<k>)".
std::string to_string(const TypeSignature& s);
std::string to_string(const PartitionType& t);

struct TverbergReport {
  std::uint64_t total = 0;
  std::map<TypeSignature, std::uint64_t> by_type;
  std::size_t q = 0;
  std::size_t d = 0;
  std::optional<std::vector<Partition>> witnesses;
  std::chrono::nanoseconds elapsed{0};
};

/// True iff the convex hulls of all blocks share a point. Decided exactly by
/// linear feasibility over barycentric weights.
bool hulls_have_common_point(std::span<const std::vector<Point>> blocks);

/// Counts the unordered partitions of (d+1)(q-1)+1 points in general position
/// into q blocks with intersecting convex hulls.
///
/// Only the two block-size signatures that can occur in general position are
/// enumerated. Within each, the common point is fixed first (the singleton, or
/// the intersection of the small blocks' affine hulls) and the remaining
/// points are split into d-simplices containing it. Every surviving candidate
/// is confirmed by hulls_have_common_point before it is counted.
TverbergReport count_tverberg(const Configuration& X, std::size_t q, bool collect_witnesses = false);

/// Type of a Tverberg partition of X read off its block sizes.
/// Throws UnclassifiablePartition when the sizes fit neither type.
PartitionType classify(const Partition& p, const Configuration& X, std::size_t q);

/// (q-d)! with no type (1 when q <= d), (q-1)! for Type I, (q-k)! for Type II.
std::uint64_t tverberg_lower_bound(std::size_t q, std::size_t d,
                                   const std::optional<PartitionType>& observed = std::nullopt);

/// (1/(q-1)!) * (q/(r+1))^ceil(N/2) with N = (d+1)(q-1), for q = p^r.
/// Throws NotPrimePower otherwise.
Rational topological_lower_bound(std::size_t q, std::size_t d);

/// (p, r) with q = p^r, or nullopt when q is not a prime power.
std::optional<std::pair<std::size_t, unsigned>> prime_power(std::size_t q);

}  // namespace birch
