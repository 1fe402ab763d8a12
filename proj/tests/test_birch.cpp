#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "birch/birch.hpp"
#include "birch/configs.hpp"
#include "oracles.hpp"

using namespace birch;

namespace {

// Two origin-centred triangles; the second is perturbed so the set is in
// general position with respect to the origin.
Configuration two_triangles() {
  const Rational e(1, 10);
  return Configuration(2, {Point{1, 0}, Point{0, 1}, Point{-1, -1}, Point{2, e}, Point{e, 2},
                           Point{-2, Rational(-2) * (1 + e)}});
}

Configuration line(std::initializer_list<long> xs) {
  std::vector<Point> p;
  for (long x : xs) p.push_back(Point{Rational(x)});
  return Configuration(1, std::move(p));
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), InvalidInput);
}

TEST_CASE("valid blocks") {
  const auto blocks = valid_blocks(two_triangles());
  // Frozen from the barycentric oracle over all 20 triples.
  const std::vector<Block> expected = {{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5},
                                       {1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
  CHECK(blocks == expected);

  CHECK(valid_blocks(Configuration(2, {Point{1, 0}, Point{2, 1}, Point{3, -1}})).empty());
  CHECK(valid_blocks(line({-1, 1})) == std::vector<Block>{{0, 1}});

  CHECK_THROWS_AS(valid_blocks(line({-1, 1, 2})), SizeMismatch);
  CHECK_THROWS_AS(valid_blocks(Configuration(2, {Point{1, 0}, Point{2, 0}, Point{0, 1}})),
                  NotGeneralPosition);
}

TEST_CASE("valid blocks match the barycentric oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Configuration X = gen_random(2, 6, seed, 20, true);
    std::vector<Block> expected;
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b) {
        for (std::size_t c = b + 1; c < 6; ++c) {
          const auto l = oracle::barycentric_of_origin({X[a], X[b], X[c]});
          if (std::all_of(l.begin(), l.end(), [](const Rational& v) { return v.sign() > 0; })) {
            expected.push_back({a, b, c});
          }
        }
      }
    }
    CHECK(valid_blocks(X) == expected);
  }
}

TEST_CASE("count on fixtures") {
  CHECK(count_birch(gen_line_balanced(3)).count == 6);
  CHECK(count_birch(gen_sierksma_birch(2, 3, Rational(1, 20))).count == 36);
  CHECK(count_birch(Configuration(2, {Point{1, 0}, Point{2, 1}, Point{3, -1}, Point{1, 5},
                                      Point{4, 4}, Point{7, -2}}))
            .count == 0);
  // Frozen from the naive oracle over all 10 pairings.
  const auto r = count_birch(two_triangles());
  CHECK(r.count == 4);
  CHECK(r.k == 2);
  CHECK(oracle::naive_birch_count(two_triangles()) == 4);
  CHECK(count_birch(line({-1, 1})).count == 1);
}

TEST_CASE("witnesses are distinct canonical partitions") {
  const auto r = count_birch(gen_sierksma_birch(2, 3, Rational(1, 20)), true);
  REQUIRE(r.witnesses);
  CHECK(r.witnesses->size() == r.count);
  std::set<Partition> unique(r.witnesses->begin(), r.witnesses->end());
  CHECK(unique.size() == r.count);
  for (const auto& p : *r.witnesses) {
    CHECK(p.covers(9));
    CHECK(p.block_sizes() == std::vector<std::size_t>{3, 3, 3});
  }
  CHECK_FALSE(count_birch(gen_line_balanced(2)).witnesses);
}

TEST_CASE("d = 1 closed form, exhaustively over sign patterns") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t negatives = 0; negatives <= 2 * k; ++negatives) {
      std::vector<Point> p;
      for (std::size_t i = 0; i < 2 * k; ++i) {
        const long mag = static_cast<long>(i + 1);
        p.push_back(Point{Rational(i < negatives ? -mag : mag)});
      }
      const std::uint64_t expected = negatives == k ? factorial(k) : 0;
      CHECK(count_birch(Configuration(1, p)).count == expected);
    }
  }
}

TEST_CASE("evenness and lower bound on random configurations") {
  for (auto [d, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    std::size_t positive = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Configuration X = gen_random(d, k * (d + 1), 1000 + seed, 30, true);
      const auto c = count_birch(X).count;
      CHECK(c % 2 == 0);
      if (c > 0) {
        ++positive;
        CHECK(c >= factorial(k));
      }
    }
    CHECK(positive > 0);
  }
}

TEST_CASE("count matches the naive LP enumerator") {
  for (auto [d, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}, std::pair{3, 2}}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Configuration X = gen_random(d, k * (d + 1), 77 + seed, 12, true);
      CHECK(count_birch(X).count == oracle::naive_birch_count(X));
    }
  }
}

TEST_CASE("count is invariant under ray scaling and linear maps") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Configuration X = gen_random(2, 6, 500 + seed, 20, true);
    const auto base = count_birch(X).count;
    CHECK(count_birch(oracle::transform(X, oracle::random_invertible(rng, 2, 4))).count == base);

    auto pts = X.points();
    const auto i = static_cast<std::size_t>(oracle::uniform(rng, 0, 5));
    pts[i] = pts[i].scaled(Rational(oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 9)));
    const Configuration Y(2, pts);
    if (is_general_position(Y, Point::origin(2))) CHECK(count_birch(Y).count == base);
  }
}

TEST_CASE("pair lemma") {
  CHECK(check_pair_lemma(Configuration(2, {Point{1, 0}, Point{0, 1}, Point{-1, -1}, Point{-2, -1}})) ==
        2);
  CHECK(check_pair_lemma(Configuration(2, {Point{1, 0}, Point{2, 1}, Point{3, -1}, Point{1, 5}})) ==
        0);
  CHECK(check_pair_lemma(line({-2, -1, 1})) == 2);
  CHECK_THROWS_AS(check_pair_lemma(line({-2, 1})), SizeMismatch);
  CHECK_THROWS_AS(check_pair_lemma(line({-1, 0, 1})), NotGeneralPosition);

  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int v = check_pair_lemma(gen_random(d, d + 2, seed, 10, true));
      CHECK((v == 0 || v == 2));
    }
  }
}
