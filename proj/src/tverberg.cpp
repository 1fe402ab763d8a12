#include "birch/tverberg.hpp"

#include <algorithm>
#include <functional>

#include "birch/birch.hpp"
#include "birch/detail/combinations.hpp"
#include "birch/detail/enumeration.hpp"

namespace birch {

using detail::Mask;

TypeSignature signature(const PartitionType& t) {
  if (const auto* two = std::get_if<TypeII>(&t)) return TypeSignature{two->k};
  return TypeSignature{1};
}

std::string to_string(const TypeSignature& s) {
  return s.is_type_one() ? "I" : "II(k=" + std::to_string(s.small_blocks) + ")";
}

std::string to_string(const PartitionType& t) {
  if (const auto* one = std::get_if<TypeI>(&t)) return "I(v=" + std::to_string(one->vertex) + ")";
  return to_string(signature(t));
}

bool hulls_have_common_point(std::span<const std::vector<Point>> blocks) {
  if (blocks.empty()) throw InvalidInput("hulls_have_common_point needs at least one block");
  std::size_t vars = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw InvalidInput("hulls_have_common_point: empty block");
    vars += b.size();
  }
  const std::size_t d = blocks.front().front().dim();
  for (const auto& b : blocks) require_dim(b, d, "hulls_have_common_point");

  // Weights lambda_{i,j} >= 0, one convexity row per block, and d rows per
  // block i > 0 equating its weighted point with that of block 0.
  const std::size_t m = blocks.size();
  Matrix rows;
  std::vector<Rational> rhs;
  rows.reserve(m + (m - 1) * d);
  std::vector<std::size_t> offset(m);
  for (std::size_t i = 0, o = 0; i < m; o += blocks[i].size(), ++i) offset[i] = o;

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(vars);
    for (std::size_t j = 0; j < blocks[i].size(); ++j) row[offset[i] + j] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Rational> row(vars);
      for (std::size_t j = 0; j < blocks[i].size(); ++j) row[offset[i] + j] = blocks[i][j][c];
      for (std::size_t j = 0; j < blocks[0].size(); ++j) row[j] = -blocks[0][j][c];
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  return linear_feasible(rows, rhs, std::vector<bool>(vars, true));
}

PartitionType classify(const Partition& p, const Configuration& X, std::size_t q) {
  const std::size_t d = X.dim();
  if (p.block_count() != q || !p.covers(X.size())) {
    throw InvalidInput("partition " + to_string(p) + " is not a partition of the " +
                       std::to_string(X.size()) + " points into " + std::to_string(q) + " blocks");
  }
  std::size_t singletons = 0, full = 0, small = 0, small_total = 0;
  std::size_t vertex = 0;
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) {
      ++singletons;
      vertex = b.front();
    }
    if (b.size() == d + 1) {
      ++full;
    } else if (b.size() <= d) {
      ++small;
      small_total += b.size();
    }
  }
  if (singletons == 1 && full == q - 1) return TypeI{vertex};

  const std::size_t k = small;
  const bool sizes_ok = full + small == q && small_total + d == (d + 1) * k;
  if (sizes_ok && k > 1 && k <= std::min(d, q)) return TypeII{k};
  throw UnclassifiablePartition("block sizes of " + to_string(p) +
                                " match neither partition type for d = " + std::to_string(d) +
                                ", q = " + std::to_string(q));
}

std::uint64_t tverberg_lower_bound(std::size_t q, std::size_t d,
                                   const std::optional<PartitionType>& observed) {
  if (q < 2 || d < 1) throw InvalidInput("tverberg_lower_bound needs q >= 2 and d >= 1");
  if (!observed) return q > d ? factorial(q - d) : 1;
  const std::size_t k = signature(*observed).small_blocks;
  return k < q ? factorial(q - k) : 1;
}

std::optional<std::pair<std::size_t, unsigned>> prime_power(std::size_t q) {
  if (q < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  unsigned r = 0;
  std::size_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{p, r};
}

Rational topological_lower_bound(std::size_t q, std::size_t d) {
  if (d < 1) throw InvalidInput("topological_lower_bound needs d >= 1");
  const auto pp = prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  const unsigned r = pp->second;
  const std::size_t n = (d + 1) * (q - 1);
  const auto exponent = static_cast<unsigned>((n + 1) / 2);
  Rational fact = 1;
  for (std::size_t i = 2; i < q; ++i) fact *= Rational(i);
  return pow(Rational(static_cast<long>(q), static_cast<long>(r + 1)), exponent) / fact;
}

namespace {

// Nondecreasing size lists s_1 <= ... <= s_k with 2 <= s_i <= d and
// sum s_i = (d+1)k - d.
void small_size_lists(std::size_t d, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t target = (d + 1) * k - d;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t left) {
    if (cur.size() == k) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t s = lo; s <= d && s <= left; ++s) {
      cur.push_back(s);
      rec(s, left - s);
      cur.pop_back();
    }
  };
  rec(2, target);
}

// The unique common point of the affine hulls of the given blocks together
// with the barycentric weights of each block, or nullopt when the affine hulls
// do not meet in exactly one point.
struct AffineMeet {
  Point point;
  bool inside_all = false;  // every weight >= 0
};

std::optional<AffineMeet> affine_meet(const Configuration& X, std::span<const Mask> blocks) {
  const std::size_t d = X.dim();
  std::size_t unknowns = d;
  std::vector<Block> members;
  for (Mask m : blocks) {
    members.push_back(detail::indices_of(m));
    unknowns += members.back().size();
  }
  const std::size_t eqs = blocks.size() * (d + 1);
  if (eqs != unknowns) return std::nullopt;

  Matrix a(eqs, std::vector<Rational>(unknowns));
  std::vector<Rational> b(eqs);
  std::size_t row = 0, col = d;
  for (const auto& blk : members) {
    for (std::size_t j = 0; j < blk.size(); ++j) a[row][col + j] = 1;
    b[row++] = 1;
    for (std::size_t c = 0; c < d; ++c, ++row) {
      for (std::size_t j = 0; j < blk.size(); ++j) a[row][col + j] = X[blk[j]][c];
      a[row][c] = -1;
    }
    col += blk.size();
  }
  auto sol = solve(std::move(a), std::move(b));
  if (!sol) return std::nullopt;
  AffineMeet meet;
  meet.point = Point(std::vector<Rational>(sol->begin(), sol->begin() + static_cast<long>(d)));
  meet.inside_all = std::all_of(sol->begin() + static_cast<long>(d), sol->end(),
                                [](const Rational& w) { return w.sign() >= 0; });
  return meet;
}

class TverbergCounter {
 public:
  TverbergCounter(const Configuration& X, std::size_t q, bool witnesses)
      : X_(X), q_(q), d_(X.dim()), all_((Mask{1} << X.size()) - 1) {
    report_.q = q;
    report_.d = d_;
    if (witnesses) report_.witnesses.emplace();
  }

  TverbergReport run() {
    count_type_one();
    for (std::size_t k = 2; k <= std::min(d_, q_); ++k) count_type_two(k);
    return std::move(report_);
  }

 private:
  void count_type_one() {
    for (std::size_t v = 0; v < X_.size(); ++v) {
      const Mask single = detail::bit(v);
      const Mask pool = all_ & ~single;
      const auto index = detail::blocks_containing(X_, pool, X_[v], true);
      const Mask fixed[] = {single};
      complete(pool, index, fixed, true);
    }
  }

  void count_type_two(std::size_t k) {
    std::vector<std::vector<std::size_t>> lists;
    small_size_lists(d_, k, lists);
    for (const auto& sizes : lists) {
      std::vector<Mask> chosen;
      choose_small(sizes, all_, chosen);
    }
  }

  void choose_small(const std::vector<std::size_t>& sizes, Mask pool, std::vector<Mask>& chosen) {
    const std::size_t pos = chosen.size();
    if (pos == sizes.size()) {
      settle_small(chosen, pool);
      return;
    }
    const Block members = detail::indices_of(pool);
    // Equal-sized small blocks are kept in increasing order of their minimum
    // so each unordered family is produced once.
    const bool tied = pos > 0 && sizes[pos] == sizes[pos - 1];
    const std::size_t floor = tied ? static_cast<std::size_t>(std::countr_zero(chosen.back())) : 0;
    detail::for_each_combination(members.size(), sizes[pos], [&](std::span<const std::size_t> s) {
      if (tied && members[s[0]] <= floor) return true;
      Mask m = 0;
      for (std::size_t i : s) m |= detail::bit(members[i]);
      chosen.push_back(m);
      choose_small(sizes, pool & ~m, chosen);
      chosen.pop_back();
      return true;
    });
  }

  void settle_small(std::span<const Mask> small, Mask pool) {
    if (auto meet = affine_meet(X_, small)) {
      if (!meet->inside_all) return;
      const auto index = pool ? detail::blocks_containing(X_, pool, meet->point, true)
                              : detail::BlockIndex{};
      complete(pool, index, small, true);
      return;
    }
    // The small blocks' affine hulls are parallel or meet in more than a
    // point; fall back to testing every completion directly.
    complete(pool, detail::all_blocks(X_, pool), small, false);
  }

  void complete(Mask pool, const detail::BlockIndex& index, std::span<const Mask> fixed,
                bool expect_feasible) {
    detail::for_each_block_partition(pool, index, [&](std::span<const Mask> blocks) {
      std::vector<std::vector<Point>> hulls;
      hulls.reserve(blocks.size() + fixed.size());
      for (Mask m : fixed) hulls.push_back(detail::gather(X_, m));
      for (Mask m : blocks) hulls.push_back(detail::gather(X_, m));
      const bool feasible = hulls_have_common_point(hulls);
      if (!feasible) {
        if (expect_feasible) {
          throw InconsistencyDetected("candidate " + to_string(detail::to_partition(blocks, fixed)) +
                                      " passed the point filter but its hulls do not meet");
        }
        return;
      }
      Partition p = detail::to_partition(blocks, fixed);
      ++report_.total;
      ++report_.by_type[signature(classify(p, X_, q_))];
      if (report_.witnesses) report_.witnesses->push_back(std::move(p));
    });
  }

  const Configuration& X_;
  std::size_t q_;
  std::size_t d_;
  Mask all_;
  TverbergReport report_;
};

}  // namespace

TverbergReport count_tverberg(const Configuration& X, std::size_t q, bool collect_witnesses) {
  const auto start = std::chrono::steady_clock::now();
  if (q < 2) throw InvalidInput("q must be at least 2");
  const std::size_t expected = (X.dim() + 1) * (q - 1) + 1;
  if (X.size() != expected) {
    throw SizeMismatch("need (d+1)(q-1)+1 = " + std::to_string(expected) + " points, got " +
                       std::to_string(X.size()));
  }
  if (X.size() >= detail::kMaxPoints) {
    throw InvalidInput("at most " + std::to_string(detail::kMaxPoints - 1) + " points supported");
  }
  if (!is_general_position(X)) throw NotGeneralPosition("configuration is not in general position");

  TverbergReport report = TverbergCounter(X, q, collect_witnesses).run();
  if (report.witnesses) std::sort(report.witnesses->begin(), report.witnesses->end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace birch
