// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "birch/birch.hpp"
#include "birch/campaign.hpp"
#include "birch/configs.hpp"
#include "birch/errors.hpp"
#include "birch/tverberg.hpp"
#include "oracles.hpp"

using namespace birch;

namespace {

const Rational kEps(1, 20);

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || s < limit_s;
  if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] AC%-2d %-34s %8.3f s", pass ? "PASS" : "FAIL", id, title, s);
  if (limit_s > 0) std::printf(" (limit %g s)", limit_s);
  std::printf("  %s\n", o.detail.c_str());
  std::fflush(stdout);
}

CampaignParams campaign(CampaignKind kind, std::size_t d, std::size_t k, std::size_t trials,
                        std::uint64_t seed) {
  CampaignParams p;
  p.kind = kind;
  p.d = d;
  p.k_or_q = k;
  p.trials = trials;
  p.seed = seed;
  p.workers = 2;
  return p;
}

std::string histogram(const CampaignResult& r) {
  std::ostringstream os;
  for (auto [count, n] : r.histogram) os << ' ' << count << 'x' << n;
  return os.str();
}

}  // namespace

int main() {
  criterion(1, "Sierksma Birch (2,3) = 36", 5, [] {
    const auto c = count_birch(gen_sierksma_birch(2, 3, kEps)).count;
    return Outcome{c == 36, "count=" + std::to_string(c)};
  });

  criterion(2, "Sierksma Tverberg (2,4) = 36", 60, [] {
    const auto t = count_tverberg(gen_sierksma_tverberg(2, 4, kEps), 4).total;
    return Outcome{t == 36, "total=" + std::to_string(t)};
  });

  criterion(3, "line_balanced(k) = k!, k=1..5", 10, [] {
    Outcome o;
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto c = count_birch(gen_line_balanced(k)).count;
      o.ok = o.ok && c == factorial(k);
      o.detail += (k > 1 ? " " : "") + std::to_string(c);
    }
    return o;
  });

  const std::pair<std::size_t, std::size_t> birch_params[] = {{2, 2}, {2, 3}, {3, 2}};
  std::vector<CampaignResult> parity_runs;
  criterion(4, "parity campaign, 3 x 200 trials", 300, [&] {
    Outcome o;
    for (auto [d, k] : birch_params) {
      parity_runs.push_back(run_campaign(campaign(CampaignKind::Parity, d, k, 200, 1000)));
      const auto& r = parity_runs.back();
      o.ok = o.ok && r.passed() && r.trials == 200;
      o.detail += "(" + std::to_string(d) + "," + std::to_string(k) + "):" +
                  std::to_string(r.violations.size()) + " viol ";
    }
    return o;
  });

  criterion(5, "lower bound k! on the same trials", 300, [&] {
    Outcome o;
    for (std::size_t i = 0; i < std::size(birch_params); ++i) {
      const auto [d, k] = birch_params[i];
      const auto r = run_campaign(campaign(CampaignKind::LowerBound, d, k, 200, 1000));
      o.ok = o.ok && r.passed();
      // Cross-check from the parity run's histogram of the identical seeds.
      if (i < parity_runs.size()) {
        for (auto [count, n] : parity_runs[i].histogram) {
          if (count > 0 && count < factorial(k)) o.ok = false;
        }
        o.ok = o.ok && r.histogram == parity_runs[i].histogram;
      }
      o.detail += "(" + std::to_string(d) + "," + std::to_string(k) + "):" + histogram(r) + " ";
    }
    return o;
  });

  criterion(6, "pair lemma, 500 sets at d=1,2,3", 60, [] {
    Outcome o;
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto r = run_campaign(campaign(CampaignKind::PairLemma, d, 0, 500, 2000));
      o.ok = o.ok && r.passed();
      for (auto [count, n] : r.histogram) o.ok = o.ok && (count == 0 || count == 2);
      o.detail += "d=" + std::to_string(d) + ":" + histogram(r) + " ";
    }
    return o;
  });

  criterion(7, "convexity equivalence, 1000 cases", 0, [] {
    std::mt19937_64 rng(7);
    std::size_t mismatches = 0, inside = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t d = 1 + i % 3;
      const Configuration S = gen_random(d, d + 1, 5000 + i, 12, true);
      const std::size_t v = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<long>(d)));
      std::vector<Point> rest;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j != v) rest.push_back(S[j]);
      }
      const bool a = simplex_contains_origin(S.points());
      const bool b = cone_contains(-S[v], rest);
      inside += a;
      mismatches += a != b;
    }
    return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches, " +
                                        std::to_string(inside) + " containing"};
  });

  criterion(8, "Tverberg parity, bound and Radon", 600, [] {
    Outcome o;
    for (auto [d, q] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 4}, {2, 4}}) {
      const auto r = run_campaign(campaign(CampaignKind::TverbergParity, d, q, 100, 3000));
      o.ok = o.ok && r.passed();
      for (auto [count, n] : r.histogram) {
        o.ok = o.ok && count % 2 == 0 && count >= tverberg_lower_bound(q, d);
      }
      o.detail += "(" + std::to_string(d) + "," + std::to_string(q) + "):" + histogram(r) + " ";
    }
    std::size_t radon_ok = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const Configuration X = gen_random(2, 4, 4000 + i, 64, false);
      const auto r = count_tverberg(X, 2, true);
      const auto naive = oracle::naive_tverberg_partitions(X, 2);
      radon_ok += r.total == 1 && naive.size() == 1 && *r.witnesses == naive;
    }
    o.ok = o.ok && radon_ok == 50;
    o.detail += "radon " + std::to_string(radon_ok) + "/50";
    return o;
  });

  criterion(9, "oracle equivalence, 20 instances", 0, [] {
    std::size_t agree = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
      const std::uint64_t seed = 6000 + i;
      bool same = false;
      switch (i % 4) {
        case 0: {
          const auto X = gen_random(2, 6, seed, 20, true);
          same = count_birch(X).count == oracle::naive_birch_count(X);
          break;
        }
        case 1: {
          const auto X = gen_random(2, 9, seed, 20, true);
          same = count_birch(X).count == oracle::naive_birch_count(X);
          break;
        }
        case 2: {
          const auto X = gen_random(2, 7, seed, 20, false);
          same = *count_tverberg(X, 3, true).witnesses == oracle::naive_tverberg_partitions(X, 3);
          break;
        }
        default: {
          const auto X = gen_random(1, 7, seed, 20, false);
          same = *count_tverberg(X, 4, true).witnesses == oracle::naive_tverberg_partitions(X, 4);
        }
      }
      agree += same;
    }
    return Outcome{agree == 20, std::to_string(agree) + "/20 agree"};
  });

  criterion(10, "scaling and linear-map invariance", 0, [] {
    std::mt19937_64 rng(10);
    std::size_t agree = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const std::size_t d = 2, k = 2 + i % 2;
      const Configuration X = gen_random(d, k * (d + 1), 7000 + i, 30, true);
      const auto base = count_birch(X).count;

      std::vector<Point> pts = X.points();
      const auto j = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<long>(pts.size()) - 1));
      pts[j] = pts[j].scaled(Rational(oracle::uniform(rng, 1, 50), oracle::uniform(rng, 1, 50)));
      const auto scaled = count_birch(Configuration(d, pts)).count;

      const auto mapped = count_birch(oracle::transform(X, oracle::random_invertible(rng, d, 5))).count;
      agree += scaled == base && mapped == base;
    }
    return Outcome{agree == 50, std::to_string(agree) + "/50 unchanged"};
  });

  criterion(11, "topological lower bound", 0, [] {
    const Rational a = topological_lower_bound(3, 2);
    const Rational b = topological_lower_bound(2, 1);
    bool rejected = false;
    try {
      topological_lower_bound(6, 2);
    } catch (const NotPrimePower&) {
      rejected = true;
    }
    return Outcome{a == Rational(27, 16) && b == Rational(1) && rejected,
                   "(3,2)=" + a.str() + " (2,1)=" + b.str() +
                       (rejected ? " q=6 rejected" : " q=6 accepted")};
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
