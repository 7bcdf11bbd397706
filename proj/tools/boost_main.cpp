// Benchmark CLI for the online boosting library.
//
//   boost run   --data FILE [--label-map SPEC] --booster NAME --weak NAME ...
//   boost synth --kind margin --T 5000 --gamma 0.1 --seed 1 [-o FILE]
//
// Exit codes: 0 success, 1 usage/parse/data errors, 2 weight-coverage
// violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osboost/dataio.hpp"
#include "osboost/harness.hpp"

namespace {

int run_command(const osboost::ExperimentConfig& cfg) {
  osboost::ExperimentSummary summary;
  try {
    summary = osboost::run_experiment(cfg);
  } catch (const osboost::ParseError& e) {
    std::cerr << "parse error in " << cfg.data_path << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    // A failed coverage check is a correctness signal, distinguish it.
    return std::string(e.what()).find("weight-coverage") != std::string::npos ? 2 : 1;
  }

  std::cout << osboost::emit_table({summary}, cfg.format);
  if (cfg.diagnostics) {
    for (const auto& trial : summary.trials) {
      if (!trial.has_coverage) continue;
      std::cout << "# seed " << trial.seed << ": coverage level " << trial.coverage.level
                << ", margin violations " << trial.coverage.margin_violations << "/"
                << trial.coverage.examples << " (delta " << trial.coverage.delta << ") -> "
                << (trial.coverage.holds ? "ok" : "VIOLATED") << '\n';
    }
  }
  return 0;
}

int synth_command(const std::string& kind, std::int64_t count, double gamma, std::uint64_t seed,
                  const std::string& output) {
  osboost::Dataset dataset;
  try {
    dataset = osboost::synthetic_stream(osboost::synthetic_kind_from_name(kind), count, gamma,
                                        seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot open output file " << output << '\n';
      return 1;
    }
    out = &file;
  }
  for (const auto& example : dataset.examples)
    *out << osboost::serialize_libsvm_line(example) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online boosting benchmark runner"};
  app.require_subcommand(1);

  osboost::ExperimentConfig cfg;
  std::string booster_name = "osboost";
  std::string weak_name = "perceptron";
  std::string format_name = "csv";

  CLI::App* run = app.add_subcommand("run", "Run seeded progressive-validation trials");
  run->add_option("--data", cfg.data_path, "LIBSVM-format dataset file")->required();
  run->add_option("--name", cfg.dataset_name, "Dataset display name (default: file name)");
  run->add_option("--label-map", cfg.label_map_spec,
                  "Raw-label remapping, e.g. \"2:-1,4:+1\"; labels +-1 pass through");
  run->add_option("--booster", booster_name,
                  "single | osboost | osboost-ocp | osboost-exp | ozaboost");
  run->add_option("--weak", weak_name, "perceptron | naive-bayes | ocp-linear");
  run->add_option("--n", cfg.n_learners, "Number of weak learners");
  run->add_option("--gamma", cfg.gamma, "Edge parameter in (0, 1/2)");
  run->add_option("--trials", cfg.trials, "Number of shuffled trials");
  run->add_option("--seed", cfg.base_seed, "Base seed; trial i uses seed+i");
  run->add_option("--out", format_name, "Table format: csv | md");
  run->add_flag("--diagnostics", cfg.diagnostics,
                "Write per-round CSV logs and run the weight-coverage check");
  run->add_option("--delta", cfg.delta, "Coverage threshold for diagnostics");
  run->add_option("--diag-dir", cfg.diagnostics_dir, "Directory for diagnostics CSV files");
  run->add_flag("--exp-deterministic", cfg.exp_deterministic,
                "Deterministic weighted-majority mode for osboost-exp");

  std::string synth_kind = "margin";
  std::int64_t synth_count = 5000;
  double synth_gamma = 0.1;
  std::uint64_t synth_seed = 1;
  std::string synth_output;

  CLI::App* synth = app.add_subcommand("synth", "Emit a synthetic margin stream as LIBSVM text");
  synth->add_option("--kind", synth_kind, "margin | noisy-margin");
  synth->add_option("--T", synth_count, "Number of examples");
  synth->add_option("--gamma", synth_gamma, "Margin parameter; every example has margin >= 3*gamma");
  synth->add_option("--seed", synth_seed, "Generator seed");
  synth->add_option("-o,--output", synth_output, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    try {
      cfg.booster = osboost::booster_kind_from_name(booster_name);
      cfg.weak = osboost::weak_kind_from_name(weak_name);
      if (format_name == "csv")
        cfg.format = osboost::TableFormat::kCsv;
      else if (format_name == "md")
        cfg.format = osboost::TableFormat::kMarkdown;
      else
        throw std::invalid_argument("unknown output format: " + format_name);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
    return run_command(cfg);
  }
  return synth_command(synth_kind, synth_count, synth_gamma, synth_seed, synth_output);
}
