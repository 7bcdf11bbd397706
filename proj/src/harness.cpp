#include "osboost/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "osboost/baselines.hpp"
#include "osboost/combiners.hpp"
#include "osboost/rng.hpp"

namespace osboost {

BoosterKind booster_kind_from_name(const std::string& name) {
  if (name == "single") return BoosterKind::kSingle;
  if (name == "osboost") return BoosterKind::kOsBoost;
  if (name == "osboost-ocp") return BoosterKind::kOsBoostOcp;
  if (name == "osboost-exp") return BoosterKind::kOsBoostExp;
  if (name == "ozaboost") return BoosterKind::kOzaBoost;
  throw std::invalid_argument("unknown booster: " + name);
}

std::string booster_kind_name(BoosterKind kind) {
  switch (kind) {
    case BoosterKind::kSingle:
      return "single";
    case BoosterKind::kOsBoost:
      return "osboost";
    case BoosterKind::kOsBoostOcp:
      return "osboost-ocp";
    case BoosterKind::kOsBoostExp:
      return "osboost-exp";
    case BoosterKind::kOzaBoost:
      return "ozaboost";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n_learners < 1) throw std::invalid_argument("n must be >= 1");
  if (!(gamma > 0.0 && gamma < 0.5)) throw std::invalid_argument("gamma must be in (0, 1/2)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
}

std::unique_ptr<OnlineBooster> make_booster(const ExperimentConfig& cfg,
                                            std::uint64_t trial_seed) {
  const BoosterParams params = BoosterParams::make(cfg.n_learners, cfg.gamma, cfg.delta);
  switch (cfg.booster) {
    case BoosterKind::kSingle:
      return std::make_unique<SingleLearnerBooster>(cfg.weak);
    case BoosterKind::kOsBoost:
      return std::make_unique<SmoothBooster>(params, cfg.weak);
    case BoosterKind::kOsBoostOcp:
      return std::make_unique<SmoothBooster>(
          params, cfg.weak, std::make_unique<OcpCombiner>(cfg.n_learners, params.theta));
    case BoosterKind::kOsBoostExp:
      return std::make_unique<SmoothBooster>(
          params, cfg.weak,
          std::make_unique<ExpCombiner>(cfg.n_learners, trial_seed + kExpCombinerSeedOffset,
                                        cfg.exp_deterministic));
    case BoosterKind::kOzaBoost:
      return std::make_unique<OzaBoost>(cfg.n_learners, cfg.weak,
                                        trial_seed + kOzaBoostSeedOffset);
  }
  throw std::logic_error("unknown booster kind");
}

namespace {

std::string diagnostics_path(const ExperimentConfig& cfg, const std::string& dataset_name,
                             std::uint64_t seed) {
  std::ostringstream name;
  name << cfg.diagnostics_dir << "/diag_" << dataset_name << '_'
       << booster_kind_name(cfg.booster) << '_' << weak_kind_name(cfg.weak) << "_seed" << seed
       << ".csv";
  return name.str();
}

}  // namespace

TrialResult run_trial(const Dataset& dataset, const ExperimentConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const Dataset stream = shuffle(dataset, seed);

  auto booster = make_booster(cfg, seed);
  auto* smooth = dynamic_cast<SmoothBooster*>(booster.get());

  std::ofstream diag;
  if (cfg.diagnostics && smooth != nullptr) {
    smooth->set_logging(true);
    diag.open(diagnostics_path(cfg, stream.name, seed));
    if (!diag) throw std::runtime_error("cannot open diagnostics output file");
    write_round_log_header(diag, cfg.n_learners);
  }

  TrialResult result;
  result.seed = seed;
  result.examples = static_cast<std::int64_t>(stream.size());

  const auto start = std::chrono::steady_clock::now();
  for (const Example& example : stream.examples) {
    const int predicted = booster->predict(example.features);
    if (predicted != example.label) ++result.mistakes;
    booster->update(example.features, example.label);
    if (diag.is_open()) write_round_log_row(diag, smooth->last_round_log());
  }
  const auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  result.error_rate =
      result.examples > 0 ? static_cast<double>(result.mistakes) / result.examples : 0.0;

  if (smooth != nullptr) {
    result.has_coverage = true;
    result.coverage = smooth->coverage(cfg.delta);
    if (auto* exp = dynamic_cast<ExpCombiner*>(smooth->combiner()))
      result.best_expert_mistakes = exp->best_expert_mistakes();
  }
  return result;
}

ExperimentSummary run_experiment_on(const Dataset& dataset, const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentSummary summary;
  summary.dataset = dataset.name;
  summary.examples = static_cast<std::int64_t>(dataset.size());
  summary.booster = booster_kind_name(cfg.booster);
  summary.weak = weak_kind_name(cfg.weak);

  for (int i = 0; i < cfg.trials; ++i) {
    TrialResult trial = run_trial(dataset, cfg, cfg.base_seed + static_cast<std::uint64_t>(i));
    if (cfg.diagnostics && trial.has_coverage && !trial.coverage.holds) {
      summary.coverage_all_hold = false;
      throw std::runtime_error("weight-coverage check failed on " + dataset.name + " seed " +
                               std::to_string(trial.seed) +
                               "; this indicates a booster implementation bug");
    }
    summary.trials.push_back(trial);
  }

  double sum = 0.0;
  double sum_seconds = 0.0;
  for (const TrialResult& t : summary.trials) {
    sum += t.error_rate;
    sum_seconds += t.seconds;
  }
  const double n = static_cast<double>(summary.trials.size());
  summary.mean_error = sum / n;
  summary.mean_seconds = sum_seconds / n;
  double ss = 0.0;
  for (const TrialResult& t : summary.trials) {
    const double d = t.error_rate - summary.mean_error;
    ss += d * d;
  }
  summary.std_error = summary.trials.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return summary;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  const LabelMap label_map = LabelMap::parse(cfg.label_map_spec);
  Dataset dataset = load_libsvm_file(cfg.data_path, label_map, cfg.dataset_name);
  return run_experiment_on(dataset, cfg);
}

std::string emit_table(const std::vector<ExperimentSummary>& summaries, TableFormat format) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  if (format == TableFormat::kCsv) {
    out << "dataset,T,booster,weak,mean_error,std_error,seconds\n";
    for (const ExperimentSummary& s : summaries) {
      out << s.dataset << ',' << s.examples << ',' << s.booster << ',' << s.weak << ','
          << s.mean_error << ',' << s.std_error << ',' << s.mean_seconds << '\n';
    }
  } else {
    out << "| dataset | T | booster | weak | mean_error | std_error | seconds |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const ExperimentSummary& s : summaries) {
      out << "| " << s.dataset << " | " << s.examples << " | " << s.booster << " | " << s.weak
          << " | " << s.mean_error << " | " << s.std_error << " | " << s.mean_seconds << " |\n";
    }
  }
  return out.str();
}

void write_round_log_header(std::ostream& out, int n_learners) {
  out << "t,label,prediction";
  for (int i = 1; i <= n_learners; ++i) out << ",w" << i;
  for (int i = 1; i <= n_learners; ++i) out << ",p" << i;
  out << '\n';
}

void write_round_log_row(std::ostream& out, const RoundLog& log) {
  out << log.t << ',' << log.label << ',' << log.prediction;
  out << std::setprecision(17);
  for (double w : log.weights) out << ',' << w;
  for (double p : log.raw_preds) out << ',' << p;
  out << '\n';
}

SyntheticKind synthetic_kind_from_name(const std::string& name) {
  if (name == "margin") return SyntheticKind::kMargin;
  if (name == "noisy-margin") return SyntheticKind::kNoisyMargin;
  throw std::invalid_argument("unknown synthetic kind: " + name);
}

namespace {

constexpr int kSyntheticDim = 10;

}  // namespace

SparseVector synthetic_reference_hypothesis() {
  std::vector<SparseVector::Entry> entries;
  const double v = 1.0 / std::sqrt(static_cast<double>(kSyntheticDim));
  for (FeatureIndex i = 1; i <= kSyntheticDim; ++i) entries.emplace_back(i, v);
  return SparseVector(std::move(entries));
}

Dataset synthetic_stream(SyntheticKind kind, std::int64_t count, double gamma,
                         std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("synthetic stream needs T >= 1");
  if (!(gamma > 0.0 && 3.0 * gamma < 1.0))
    throw std::invalid_argument("synthetic stream needs 0 < 3*gamma < 1");

  const SparseVector reference = synthetic_reference_hypothesis();
  const double min_margin = 3.0 * gamma;
  SplitMix64 rng(seed);

  Dataset dataset;
  dataset.name = kind == SyntheticKind::kMargin ? "synthetic-margin" : "synthetic-noisy-margin";
  dataset.dimension = kSyntheticDim;
  dataset.examples.reserve(static_cast<std::size_t>(count));

  while (dataset.examples.size() < static_cast<std::size_t>(count)) {
    // Uniform point in the ball: Gaussian direction, radius by inverse CDF.
    std::vector<double> direction(kSyntheticDim);
    double norm_sq = 0.0;
    for (double& d : direction) {
      d = rng.next_gaussian();
      norm_sq += d * d;
    }
    if (norm_sq == 0.0) continue;
    const double radius =
        std::pow(rng.next_double(), 1.0 / kSyntheticDim) / std::sqrt(norm_sq);

    std::vector<SparseVector::Entry> entries;
    entries.reserve(kSyntheticDim);
    for (int i = 0; i < kSyntheticDim; ++i)
      entries.emplace_back(static_cast<FeatureIndex>(i + 1), direction[i] * radius);
    SparseVector x(std::move(entries));

    const double margin = dot(reference, x);
    if (std::abs(margin) < min_margin) continue;  // rejection keeps the advantage

    Example example;
    example.features = std::move(x);
    example.label = sign01(margin);
    if (kind == SyntheticKind::kNoisyMargin && rng.next_double() < 0.05)
      example.label = -example.label;
    dataset.examples.push_back(std::move(example));
  }
  return dataset;
}

}  // namespace osboost
