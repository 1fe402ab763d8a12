#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "birch/kernel.hpp"

namespace birch {

enum class CampaignKind { Parity, LowerBound, PairLemma, TverbergParity, ConjectureSearch };

/// "parity", "lower-bound", "pair-lemma", "tverberg-parity", "conjecture-search".
CampaignKind parse_campaign_kind(const std::string& name);
std::string to_string(CampaignKind kind);

struct CampaignParams {
  CampaignKind kind = CampaignKind::Parity;
  std::size_t d = 2;
  /// k for the Birch campaigns, q for tverberg-parity, unused by pair-lemma.
  std::size_t k_or_q = 2;
  std::size_t trials = 100;
  /// Trial i uses seed + i.
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::int64_t coord_bound = 64;
};

struct Violation {
  std::uint64_t seed = 0;
  std::string parameters;
  std::string observed;
  std::string expected;
  Configuration config;
};

struct CampaignResult {
  std::string campaign;
  CampaignParams params;
  std::size_t trials = 0;
  std::vector<Violation> violations;
  std::uint64_t max_observed = 0;
  /// (k!)^d for the Birch campaigns.
  std::optional<std::uint64_t> conjecture_ceiling;
  /// Birch count of the Sierksma configuration with the same (d, k).
  std::optional<std::uint64_t> sierksma_baseline;
  /// Observed count -> number of trials.
  std::map<std::uint64_t, std::size_t> histogram;
  /// conjecture-search only: trials whose count exceeded the ceiling.
  std::vector<Violation> counterexamples;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return violations.empty(); }
  bool within_ceiling() const { return !conjecture_ceiling || max_observed <= *conjecture_ceiling; }
};

/// Estimated number of candidate partitions one trial enumerates; used to
/// refuse runs beyond desk scale.
double estimated_candidates(const CampaignParams& params);
inline constexpr double kMaxCandidatesPerTrial = 1e7;

/// Runs every trial and aggregates in trial order, so the worker count only
/// affects elapsed time. Throws InvalidInput on bad parameters; property
/// violations are reported in the result, not thrown.
CampaignResult run_campaign(const CampaignParams& params);

nlohmann::json to_json(const CampaignResult& result);
std::string to_human(const CampaignResult& result);

}  // namespace birch
