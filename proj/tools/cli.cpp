#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "birch/birch.hpp"
#include "birch/campaign.hpp"
#include "birch/config_io.hpp"
#include "birch/configs.hpp"
#include "birch/tverberg.hpp"

namespace birch::cli {

namespace {

using nlohmann::json;

double seconds(std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); }

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

struct CountOptions {
  std::string subject;
  std::string input;
  std::size_t q = 0;
  bool witnesses = false;
  std::string format = "human";
};

int count_birch_cmd(const CountOptions& o, const Configuration& X, std::ostream& out) {
  const BirchReport r = count_birch(X, o.witnesses);
  const std::uint64_t k_fact = factorial(r.k);
  // (k!)^d overflows 64 bits well beyond enumerable sizes; report it only
  // when it fits.
  std::optional<std::uint64_t> ceiling;
  if (std::pow(static_cast<double>(k_fact), static_cast<double>(X.dim())) < 1.8e19) {
    ceiling = power(k_fact, X.dim());
  }

  if (o.format == "structured") {
    json j{{"subject", "birch"},  {"points", X.size()}, {"dim", X.dim()},
           {"k", r.k},            {"count", r.count},   {"lower_bound_k_factorial", k_fact},
           {"elapsed_seconds", seconds(r.elapsed)}};
    if (ceiling) {
      j["conjecture_ceiling"] = *ceiling;
      j["within_ceiling"] = r.count <= *ceiling;
    }
    if (r.witnesses) {
      j["witnesses"] = json::array();
      for (const auto& p : *r.witnesses) j["witnesses"].push_back(p.blocks());
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "subject:        birch\n"
      << "points:         " << X.size() << " (d=" << X.dim() << ", k=" << r.k << ")\n"
      << "count:          " << r.count << '\n'
      << "bound k!:       " << k_fact << "  (positive counts are at least this)\n";
  if (ceiling) {
    out << "ceiling (k!)^d: " << *ceiling << (r.count <= *ceiling ? "  (not exceeded)" : "  (EXCEEDED)")
        << '\n';
  }
  out << "elapsed:        " << std::fixed << std::setprecision(3) << seconds(r.elapsed) << " s\n";
  if (r.witnesses) {
    out << "witnesses:\n";
    for (const auto& p : *r.witnesses) out << "  " << to_string(p) << '\n';
  }
  return kOk;
}

int count_tverberg_cmd(const CountOptions& o, const Configuration& X, std::ostream& out) {
  if (o.q < 2) throw InvalidInput("count tverberg needs --q >= 2");
  const TverbergReport r = count_tverberg(X, o.q, o.witnesses);
  const std::size_t d = X.dim();
  const std::uint64_t bound = tverberg_lower_bound(o.q, d);
  std::optional<std::uint64_t> type_bound;
  if (!r.by_type.empty()) {
    const std::size_t k_min = r.by_type.begin()->first.small_blocks;
    type_bound = tverberg_lower_bound(o.q, d, k_min == 1 ? PartitionType{TypeI{0}} : TypeII{k_min});
  }
  std::optional<Rational> topological;
  if (prime_power(o.q)) topological = topological_lower_bound(o.q, d);
  std::optional<std::uint64_t> sierksma;
  if (std::pow(static_cast<double>(factorial(o.q - 1)), static_cast<double>(d)) < 1.8e19) {
    sierksma = power(factorial(o.q - 1), d);
  }

  if (o.format == "structured") {
    json by_type = json::object();
    for (auto [sig, n] : r.by_type) by_type[to_string(sig)] = n;
    json j{{"subject", "tverberg"},
           {"points", X.size()},
           {"dim", d},
           {"q", o.q},
           {"total", r.total},
           {"by_type", by_type},
           {"lower_bound_q_minus_d_factorial", bound},
           {"elapsed_seconds", seconds(r.elapsed)}};
    if (type_bound) j["lower_bound_observed_type"] = *type_bound;
    if (topological) j["topological_lower_bound"] = topological->str();
    if (sierksma) j["sierksma_conjectured_minimum"] = *sierksma;
    if (r.witnesses) {
      j["witnesses"] = json::array();
      for (const auto& p : *r.witnesses) {
        j["witnesses"].push_back({{"blocks", p.blocks()}, {"type", to_string(classify(p, X, o.q))}});
      }
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "subject:        tverberg\n"
      << "points:         " << X.size() << " (d=" << d << ", q=" << o.q << ")\n"
      << "total:          " << r.total << '\n'
      << "by type:       ";
  for (auto [sig, n] : r.by_type) out << ' ' << to_string(sig) << '=' << n;
  out << '\n' << "bound (q-d)!:   " << bound << '\n';
  if (type_bound) out << "bound by type:  " << *type_bound << "  ((q-k)! for the smallest observed k)\n";
  if (topological) out << "topological:    " << topological->str() << "  (prime-power bound)\n";
  if (sierksma) out << "((q-1)!)^d:     " << *sierksma << "  (conjectured minimum, report only)\n";
  out << "elapsed:        " << std::fixed << std::setprecision(3) << seconds(r.elapsed) << " s\n";
  if (r.witnesses) {
    out << "witnesses:\n";
    for (const auto& p : *r.witnesses) {
      out << "  " << to_string(p) << "  type " << to_string(classify(p, X, o.q)) << '\n';
    }
  }
  return kOk;
}

struct GenerateOptions {
  std::string kind;
  std::size_t d = 2;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t n = 0;
  std::string epsilon = "1/20";
  std::uint64_t seed = 0;
  std::int64_t coord_bound = 64;
  bool wrt_origin = true;
  std::string out_path;
};

int generate_cmd(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(o.kind);
  spec.d = spec.kind == GeneratorKind::LineBalanced ? 1 : o.d;
  spec.k_or_q = spec.kind == GeneratorKind::SierksmaTverberg ? o.q : o.k;
  spec.n = o.n;
  try {
    spec.epsilon = Rational::parse(o.epsilon);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("--epsilon: ") + e.what());
  }
  spec.seed = o.seed;
  spec.coord_bound = o.coord_bound;
  spec.wrt_origin = o.wrt_origin;

  const Configuration X = generate(spec);
  const bool origin_gp = is_general_position(X, Point::origin(X.dim()));
  if (o.out_path.empty()) {
    out << write_configuration(X);
  } else {
    save_configuration(o.out_path, X);
  }
  std::ostream& summary = o.out_path.empty() ? err : out;
  summary << "generated " << to_string(spec.kind) << ": " << X.size() << " points, d=" << X.dim()
          << "; general position: " << (is_general_position(X) ? "yes" : "no")
          << "; with origin: " << (origin_gp ? "yes" : "no") << '\n';
  if (!o.out_path.empty()) out << "wrote " << o.out_path << '\n';
  return kOk;
}

struct CampaignOptions {
  std::string name;
  std::size_t d = 2;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::int64_t coord_bound = 64;
  std::string format = "human";
};

int campaign_cmd(const CampaignOptions& o, std::ostream& out) {
  CampaignParams p;
  p.kind = parse_campaign_kind(o.name);
  p.d = o.d;
  p.k_or_q = p.kind == CampaignKind::TverbergParity ? o.q : o.k;
  if (p.kind == CampaignKind::TverbergParity && o.q == 0) throw InvalidInput("--q is required");
  if (p.kind != CampaignKind::TverbergParity && p.kind != CampaignKind::PairLemma && o.k == 0) {
    throw InvalidInput("--k is required");
  }
  p.trials = o.trials;
  p.seed = o.seed;
  p.workers = o.workers;
  p.coord_bound = o.coord_bound;

  const CampaignResult r = run_campaign(p);
  if (o.format == "structured") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << to_human(r);
  }
  return r.passed() ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Birch and Tverberg partition counting"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"human", "structured"});

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "count Birch or Tverberg partitions of a configuration");
  count_cmd->add_option("subject", count.subject, "birch or tverberg")
      ->required()
      ->check(CLI::IsMember({"birch", "tverberg"}));
  count_cmd->add_option("--input,-i", count.input, "configuration file (.json or text)")->required();
  count_cmd->add_option("--q", count.q, "number of Tverberg blocks");
  count_cmd->add_flag("--witnesses", count.witnesses, "list every counted partition");
  count_cmd->add_option("--format", count.format, "human or structured")->check(formats);

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated configuration");
  gen_cmd->add_option("--kind", gen.kind, "sierksma_birch, sierksma_tverberg, line_balanced, random")
      ->required()
      ->check(CLI::IsMember({"sierksma_birch", "sierksma_tverberg", "line_balanced", "random"}));
  gen_cmd->add_option("--d", gen.d, "dimension");
  gen_cmd->add_option("--k", gen.k, "cluster size (sierksma_birch, line_balanced)");
  gen_cmd->add_option("--q", gen.q, "block count (sierksma_tverberg)");
  gen_cmd->add_option("--n", gen.n, "number of points (random)");
  gen_cmd->add_option("--epsilon", gen.epsilon, "cluster radius, rational in (0, 1/10)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--coord-bound", gen.coord_bound, "lattice bound for random points");
  gen_cmd->add_flag("--wrt-origin,!--no-wrt-origin", gen.wrt_origin,
                    "random: require general position with the origin (default on)");
  gen_cmd->add_option("--out,-o", gen.out_path, "output file; stdout when omitted");

  CampaignOptions camp;
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      camp.workers = std::stoul(env);
    } catch (const std::exception&) {
      err << "error: " << kWorkersEnv << " must be a positive integer\n";
      return kUsage;
    }
  }
  auto* camp_cmd = app.add_subcommand("campaign", "run a seeded property or conjecture campaign");
  camp_cmd->add_option("name", camp.name, "parity, lower-bound, pair-lemma, tverberg-parity, conjecture-search")
      ->required()
      ->check(CLI::IsMember({"parity", "lower-bound", "pair-lemma", "tverberg-parity", "conjecture-search"}));
  camp_cmd->add_option("--d", camp.d, "dimension");
  camp_cmd->add_option("--k", camp.k, "Birch block count");
  camp_cmd->add_option("--q", camp.q, "Tverberg block count");
  camp_cmd->add_option("--trials", camp.trials, "number of seeded trials");
  camp_cmd->add_option("--seed", camp.seed, "seed of trial 0; trial i uses seed+i");
  camp_cmd->add_option("--workers", camp.workers, "worker threads (default from BIRCH_WORKERS)");
  camp_cmd->add_option("--coord-bound", camp.coord_bound, "lattice bound for random points");
  camp_cmd->add_option("--format", camp.format, "human or structured")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count_cmd) {
      const Configuration X = load_configuration(count.input);
      return count.subject == "birch" ? count_birch_cmd(count, X, out)
                                      : count_tverberg_cmd(count, X, out);
    }
    if (*gen_cmd) return generate_cmd(gen, out, err);
    if (*camp_cmd) return campaign_cmd(camp, out);
  } catch (const InconsistencyDetected& e) {
    err << "property violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace birch::cli
