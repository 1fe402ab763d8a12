#include "birch/campaign.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "birch/birch.hpp"
#include "birch/config_io.hpp"
#include "birch/configs.hpp"
#include "birch/tverberg.hpp"

namespace birch {

CampaignKind parse_campaign_kind(const std::string& name) {
  if (name == "parity") return CampaignKind::Parity;
  if (name == "lower-bound") return CampaignKind::LowerBound;
  if (name == "pair-lemma") return CampaignKind::PairLemma;
  if (name == "tverberg-parity") return CampaignKind::TverbergParity;
  if (name == "conjecture-search") return CampaignKind::ConjectureSearch;
  throw InvalidInput("unknown campaign '" + name + "'");
}

std::string to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::Parity: return "parity";
    case CampaignKind::LowerBound: return "lower-bound";
    case CampaignKind::PairLemma: return "pair-lemma";
    case CampaignKind::TverbergParity: return "tverberg-parity";
    case CampaignKind::ConjectureSearch: return "conjecture-search";
  }
  return "?";
}

namespace {

bool is_birch_campaign(CampaignKind kind) {
  return kind == CampaignKind::Parity || kind == CampaignKind::LowerBound ||
         kind == CampaignKind::ConjectureSearch;
}

std::size_t point_count(const CampaignParams& p) {
  switch (p.kind) {
    case CampaignKind::PairLemma: return p.d + 2;
    case CampaignKind::TverbergParity: return (p.d + 1) * (p.k_or_q - 1) + 1;
    default: return p.k_or_q * (p.d + 1);
  }
}

std::string describe(const CampaignParams& p) {
  std::string s = "d=" + std::to_string(p.d);
  if (p.kind == CampaignKind::TverbergParity) {
    s += " q=" + std::to_string(p.k_or_q);
  } else if (p.kind != CampaignKind::PairLemma) {
    s += " k=" + std::to_string(p.k_or_q);
  }
  return s;
}

double log_factorial(double n) { return std::lgamma(n + 1); }

// log of n! / (prod sizes! * prod multiplicities!) for a fixed size list.
double log_partitions(std::size_t n, const std::map<std::size_t, std::size_t>& sizes) {
  double l = log_factorial(static_cast<double>(n));
  for (auto [size, mult] : sizes) {
    l -= static_cast<double>(mult) * log_factorial(static_cast<double>(size));
    l -= log_factorial(static_cast<double>(mult));
  }
  return l;
}

struct TrialOutcome {
  std::uint64_t observed = 0;
  std::optional<Violation> violation;
  std::optional<Violation> counterexample;
  std::exception_ptr error;
};

Violation make_violation(std::uint64_t seed, const CampaignParams& p, std::string observed,
                         std::string expected, Configuration X) {
  return Violation{seed, describe(p), std::move(observed), std::move(expected), std::move(X)};
}

TrialOutcome run_trial(const CampaignParams& p, std::uint64_t seed,
                       std::optional<std::uint64_t> ceiling) {
  TrialOutcome out;
  const bool wrt_origin = p.kind != CampaignKind::TverbergParity;
  Configuration X = gen_random(p.d, point_count(p), seed, p.coord_bound, wrt_origin);
  try {
    switch (p.kind) {
      case CampaignKind::Parity:
      case CampaignKind::LowerBound:
      case CampaignKind::ConjectureSearch: {
        const std::uint64_t count = count_birch(X).count;
        out.observed = count;
        const std::size_t k = p.k_or_q;
        if (p.kind == CampaignKind::Parity && k >= 2 && count % 2 != 0) {
          out.violation = make_violation(seed, p, std::to_string(count), "even", X);
        }
        if (p.kind == CampaignKind::LowerBound && k >= 2 && count > 0 && count < factorial(k)) {
          out.violation = make_violation(seed, p, std::to_string(count),
                                         "0 or >= " + std::to_string(factorial(k)), X);
        }
        if (p.kind == CampaignKind::ConjectureSearch && ceiling && count > *ceiling) {
          out.counterexample = make_violation(seed, p, std::to_string(count),
                                              "<= " + std::to_string(*ceiling), X);
        }
        break;
      }
      case CampaignKind::PairLemma:
        out.observed = static_cast<std::uint64_t>(check_pair_lemma(X));
        break;
      case CampaignKind::TverbergParity: {
        const std::size_t q = p.k_or_q;
        const TverbergReport r = count_tverberg(X, q);
        out.observed = r.total;
        std::vector<std::string> failed;
        if (r.total < 1) failed.push_back("at least one partition");
        if (r.total < tverberg_lower_bound(q, p.d)) {
          failed.push_back(">= (q-d)! = " + std::to_string(tverberg_lower_bound(q, p.d)));
        }
        if (!r.by_type.empty()) {
          const std::size_t k_min = r.by_type.begin()->first.small_blocks;
          const std::uint64_t bound =
              tverberg_lower_bound(q, p.d, k_min == 1 ? PartitionType{TypeI{0}} : TypeII{k_min});
          if (r.total < bound) failed.push_back(">= (q-k_min)! = " + std::to_string(bound));
        }
        if (q > p.d + 1 && r.total % 2 != 0) failed.push_back("even");
        if (!failed.empty()) {
          std::string expected;
          for (const auto& f : failed) expected += (expected.empty() ? "" : ", ") + f;
          out.violation = make_violation(seed, p, std::to_string(r.total), expected, X);
        }
        break;
      }
    }
  } catch (const InconsistencyDetected& e) {
    out.violation = make_violation(seed, p, e.what(), "no inconsistency", X);
  } catch (const UnclassifiablePartition& e) {
    out.violation = make_violation(seed, p, e.what(), "every partition classified", X);
  }
  return out;
}

void validate(const CampaignParams& p) {
  if (p.d < 1) throw InvalidInput("d must be at least 1");
  if (p.kind == CampaignKind::TverbergParity && p.k_or_q < 2) {
    throw InvalidInput("q must be at least 2");
  }
  if (is_birch_campaign(p.kind) && p.k_or_q < 1) throw InvalidInput("k must be at least 1");
  if (p.coord_bound < static_cast<std::int64_t>(point_count(p))) {
    throw InvalidInput("coord_bound must be at least the number of points (" +
                       std::to_string(point_count(p)) + ")");
  }
  if (is_birch_campaign(p.kind) && std::pow(static_cast<double>(factorial(p.k_or_q)),
                                            static_cast<double>(p.d)) >= 1.8e19) {
    throw InvalidInput("(k!)^d does not fit in 64 bits");
  }
  const double estimate = estimated_candidates(p);
  if (estimate > kMaxCandidatesPerTrial) {
    std::ostringstream os;
    os << "about " << std::setprecision(3) << estimate
       << " candidate partitions per trial exceeds the desk-scale ceiling of "
       << kMaxCandidatesPerTrial;
    throw InvalidInput(os.str());
  }
}

}  // namespace

double estimated_candidates(const CampaignParams& p) {
  if (p.kind == CampaignKind::PairLemma) return static_cast<double>(p.d + 2);
  const std::size_t n = point_count(p);
  if (is_birch_campaign(p.kind)) {
    return std::exp(log_partitions(n, {{p.d + 1, p.k_or_q}}));
  }
  // Tverberg: Type I plus every Type II size signature.
  const std::size_t d = p.d, q = p.k_or_q;
  double total = std::exp(log_partitions(n, {{1, 1}, {d + 1, q - 1}}));
  for (std::size_t k = 2; k <= std::min(d, q); ++k) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t lo, std::size_t left) -> void {
      if (cur.size() == k) {
        if (left != 0) return;
        std::map<std::size_t, std::size_t> sizes;
        for (std::size_t s : cur) ++sizes[s];
        if (q > k) sizes[d + 1] += q - k;
        total += std::exp(log_partitions(n, sizes));
        return;
      }
      for (std::size_t s = lo; s <= d && s <= left; ++s) {
        cur.push_back(s);
        self(self, s, left - s);
        cur.pop_back();
      }
    };
    rec(rec, 2, (d + 1) * k - d);
  }
  return total;
}

CampaignResult run_campaign(const CampaignParams& params) {
  const auto start = std::chrono::steady_clock::now();
  validate(params);

  CampaignResult result;
  result.campaign = to_string(params.kind);
  result.params = params;
  result.trials = params.trials;
  if (is_birch_campaign(params.kind)) {
    std::uint64_t ceiling = 1;
    for (std::size_t i = 0; i < params.d; ++i) ceiling *= factorial(params.k_or_q);
    result.conjecture_ceiling = ceiling;
    result.sierksma_baseline = count_birch(gen_sierksma_birch(params.d, params.k_or_q, Rational(1, 20))).count;
  }

  std::vector<TrialOutcome> outcomes(params.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.trials; i = next++) {
      try {
        outcomes[i] = run_trial(params, params.seed + i, result.conjecture_ceiling);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(params.workers, params.trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (auto& o : outcomes) {
    if (o.error) std::rethrow_exception(o.error);
    result.max_observed = std::max(result.max_observed, o.observed);
    ++result.histogram[o.observed];
    if (o.violation) result.violations.push_back(std::move(*o.violation));
    if (o.counterexample) result.counterexamples.push_back(std::move(*o.counterexample));
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

namespace {

nlohmann::json to_json(const Violation& v) {
  return {{"seed", v.seed},
          {"parameters", v.parameters},
          {"observed", v.observed},
          {"expected", v.expected},
          {"configuration", nlohmann::json::parse(write_configuration_json(v.config))}};
}

double seconds(std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); }

}  // namespace

nlohmann::json to_json(const CampaignResult& r) {
  nlohmann::json j;
  j["campaign"] = r.campaign;
  j["d"] = r.params.d;
  if (r.params.kind == CampaignKind::TverbergParity) {
    j["q"] = r.params.k_or_q;
  } else if (r.params.kind != CampaignKind::PairLemma) {
    j["k"] = r.params.k_or_q;
  }
  j["trials"] = r.trials;
  j["seed"] = r.params.seed;
  j["coord_bound"] = r.params.coord_bound;
  j["passed"] = r.passed();
  j["max_observed"] = r.max_observed;
  if (r.conjecture_ceiling) {
    j["conjecture_ceiling"] = *r.conjecture_ceiling;
    j["within_ceiling"] = r.within_ceiling();
  }
  if (r.sierksma_baseline) j["sierksma_baseline"] = *r.sierksma_baseline;
  nlohmann::json hist = nlohmann::json::object();
  for (auto [count, trials] : r.histogram) hist[std::to_string(count)] = trials;
  j["histogram"] = std::move(hist);
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& v : r.counterexamples) j["counterexamples"].push_back(to_json(v));
  j["elapsed_seconds"] = seconds(r.elapsed);
  return j;
}

std::string to_human(const CampaignResult& r) {
  std::ostringstream os;
  os << "campaign:      " << r.campaign << " (" << describe(r.params) << ")\n";
  os << "trials:        " << r.trials << "  (seeds " << r.params.seed << ".."
     << r.params.seed + (r.trials ? r.trials - 1 : 0) << ", coord_bound " << r.params.coord_bound
     << ")\n";
  os << "max observed:  " << r.max_observed << '\n';
  if (r.conjecture_ceiling) {
    os << "ceiling (k!)^d: " << *r.conjecture_ceiling
       << (r.within_ceiling() ? "  (not exceeded)" : "  (EXCEEDED)") << '\n';
  }
  if (r.sierksma_baseline) os << "sierksma:      " << *r.sierksma_baseline << '\n';
  os << "histogram:    ";
  for (auto [count, trials] : r.histogram) os << ' ' << count << ':' << trials;
  os << '\n';
  for (const auto& c : r.counterexamples) {
    os << "\n*** COUNTEREXAMPLE FOUND ***\n"
       << "seed " << c.seed << " (" << c.parameters << "): count " << c.observed << ", ceiling "
       << c.expected << '\n'
       << write_configuration(c.config);
  }
  for (const auto& v : r.violations) {
    os << "\nVIOLATION seed " << v.seed << " (" << v.parameters << "): observed " << v.observed
       << ", expected " << v.expected << '\n'
       << write_configuration(v.config);
  }
  os << "violations:    " << r.violations.size() << '\n';
  os << "result:        " << (r.passed() ? "PASS" : "FAIL") << '\n';
  os << "elapsed:       " << std::fixed << std::setprecision(3) << seconds(r.elapsed) << " s\n";
  return os.str();
}

}  // namespace birch
