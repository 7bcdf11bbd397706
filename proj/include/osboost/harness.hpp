#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "osboost/dataio.hpp"
#include "osboost/smooth_boost.hpp"

namespace osboost {

enum class BoosterKind { kSingle, kOsBoost, kOsBoostOcp, kOsBoostExp, kOzaBoost };

BoosterKind booster_kind_from_name(const std::string& name);
std::string booster_kind_name(BoosterKind kind);

enum class TableFormat { kCsv, kMarkdown };

// Seed derivation: trial i shuffles with base_seed + i; per-trial combiner
// and OzaBoost generators are offset from the trial seed by the constants
// below so the three streams never alias.
constexpr std::uint64_t kExpCombinerSeedOffset = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kOzaBoostSeedOffset = 0x517CC1B727220A95ULL;

struct ExperimentConfig {
  std::string data_path;
  std::string dataset_name;  // defaults to the file name
  std::string label_map_spec;
  BoosterKind booster = BoosterKind::kOsBoost;
  WeakKind weak = WeakKind::kPerceptron;
  int n_learners = 100;
  double gamma = 0.1;
  int trials = 5;
  std::uint64_t base_seed = 7;
  TableFormat format = TableFormat::kCsv;
  bool diagnostics = false;
  double delta = 0.3;
  bool exp_deterministic = false;  // deterministic weighted-majority mode for EXP
  std::string diagnostics_dir = ".";

  void validate() const;
};

struct TrialResult {
  std::int64_t mistakes = 0;
  std::int64_t examples = 0;
  double error_rate = 0.0;
  double seconds = 0.0;
  std::uint64_t seed = 0;
  bool has_coverage = false;
  CoverageReport coverage;
  // EXP-only: mistakes of the best prefix expert in hindsight, for regret
  // reporting.
  std::int64_t best_expert_mistakes = -1;
};

struct ExperimentSummary {
  std::string dataset;
  std::int64_t examples = 0;
  std::string booster;
  std::string weak;
  double mean_error = 0.0;
  double std_error = 0.0;
  double mean_seconds = 0.0;
  std::vector<TrialResult> trials;
  bool coverage_all_hold = true;
};

std::unique_ptr<OnlineBooster> make_booster(const ExperimentConfig& cfg, std::uint64_t trial_seed);

// One progressive-validation pass: shuffle with `seed`, predict each example
// before its label is revealed, count mistakes, then train.
TrialResult run_trial(const Dataset& dataset, const ExperimentConfig& cfg, std::uint64_t seed);

// Loads the dataset and runs cfg.trials seeded trials (seeds base, base+1,
// ...). With diagnostics on, every trial is weight-coverage checked and a
// failed check raises.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);
ExperimentSummary run_experiment_on(const Dataset& dataset, const ExperimentConfig& cfg);

// Result table. Columns, in order:
//   dataset, T, booster, weak, mean_error, std_error, seconds
std::string emit_table(const std::vector<ExperimentSummary>& summaries, TableFormat format);

// Diagnostics CSV schema: t,label,prediction,w1..wN,p1..pN (one row per
// example).
void write_round_log_header(std::ostream& out, int n_learners);
void write_round_log_row(std::ostream& out, const RoundLog& log);

enum class SyntheticKind { kMargin, kNoisyMargin };

SyntheticKind synthetic_kind_from_name(const std::string& name);

// Synthetic streams in a 10-dimensional unit ball, labeled by a fixed unit
// vector h* and rejection-sampled so every example satisfies
// y*<h*, x> >= 3*gamma. The noisy variant then flips each label with
// probability 0.05. Requires 3*gamma < 1.
Dataset synthetic_stream(SyntheticKind kind, std::int64_t count, double gamma, std::uint64_t seed);

// The reference vector used by synthetic_stream, for advantage checks.
SparseVector synthetic_reference_hypothesis();

}  // namespace osboost
