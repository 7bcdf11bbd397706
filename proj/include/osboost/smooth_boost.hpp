#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "osboost/core.hpp"
#include "osboost/weak_learners.hpp"

namespace osboost {

// Parameters of the smooth booster. theta is the margin edge
// gamma / (2 + gamma); delta only drives the weight-coverage diagnostic.
struct BoosterParams {
  int n_learners = 100;
  double gamma = 0.1;
  double theta = 0.1 / 2.1;
  double delta = 0.3;

  static BoosterParams make(int n_learners, double gamma, double delta = 0.3);
};

// min{(1 - gamma)^(z/2), 1}, evaluated as exp((z/2) * log1p(-gamma)) so
// large |z| cannot blow up. The result is floored at the smallest normal
// double: the true value is strictly positive and downstream bookkeeping
// relies on weights staying in (0, 1].
double smooth_weight(double z, double gamma);

// (1/i) * sum of the first i entries, 1-based. Throws on i out of range.
double prefix_vote(const std::vector<double>& preds, int i);

// Per-example diagnostic record.
struct RoundLog {
  std::int64_t t = 0;  // 1-based position in the stream
  int label = 0;
  int prediction = 0;
  std::vector<double> weights;        // w^(1..N), the weights sent to the learners
  double next_weight = 1.0;           // w^(N+1), the weight the next learner would get
  std::vector<double> raw_preds;      // h^(1..N)(x), cached pre-update
  std::vector<double> prefix_margins; // y * (1/i) * sum_{j<=i} h^(j)(x)
};

// Result of the weight-coverage margin check. `level` is the longest
// hypothesis prefix certified by the weight bookkeeping: the prefix just
// before the first learner whose cumulative weight dropped below delta*T
// (the sequence is extended by the would-be (N+1)-th weight so a fully
// heavy ensemble is detectable). level = 0 means every weight sum is still
// >= delta*T and the bound is vacuous for this run.
struct CoverageReport {
  int level = 0;
  std::int64_t margin_violations = 0;
  std::int64_t examples = 0;
  double delta = 0.0;
  bool holds = true;
};

// Check from explicit per-round logs; mirrors the booster's internal
// streaming counters and exists so tests can drive it with synthetic logs.
CoverageReport coverage_check(const std::vector<RoundLog>& logs,
                          const std::vector<double>& cum_weights_extended, double delta,
                          double theta);

// Voting rule layered over the cached weak predictions. vote() may consume
// randomness; observe() runs once per example, after the label is revealed
// and before the weak learners are updated.
class VoteCombiner {
 public:
  virtual ~VoteCombiner() = default;
  virtual int vote(const std::vector<double>& preds) = 0;
  virtual void observe(const std::vector<double>& preds, int label) = 0;
};

// Default OSBoost rule: sign of the plain sum over all N learners.
class UniformCombiner final : public VoteCombiner {
 public:
  int vote(const std::vector<double>& preds) override;
  void observe(const std::vector<double>&, int) override {}
};

// Base class fixing the progressive-validation protocol: predict(x) must be
// called exactly once before each update(x, y), so no path can leak a label
// into the prediction it is scored against.
class OnlineBooster {
 public:
  virtual ~OnlineBooster() = default;

  int predict(const SparseVector& x);
  void update(const SparseVector& x, int label);

  // Convenience: predict, then update; returns the committed prediction.
  int process(const SparseVector& x, int label);

  std::int64_t examples_seen() const { return examples_seen_; }

 protected:
  virtual int do_predict(const SparseVector& x) = 0;
  virtual void do_update(const SparseVector& x, int label) = 0;

  int last_prediction_ = 0;
  std::int64_t examples_seen_ = 0;

 private:
  bool prediction_pending_ = false;
};

// Online smooth booster: runs N weak learners in parallel, feeds learner i
// the weight w^(i) from the z recursion
//   z^(i) = z^(i-1) + y*h^(i)(x) - theta,   w^(i+1) = min{(1-gamma)^(z^(i)/2), 1}
// over the predictions cached before any update, and predicts through a
// pluggable vote combiner (uniform by default).
class SmoothBooster : public OnlineBooster {
 public:
  SmoothBooster(BoosterParams params, WeakKind weak_kind,
                std::unique_ptr<VoteCombiner> combiner = nullptr);
  // Takes ownership of pre-built learners; used by tests to inject stubs.
  SmoothBooster(BoosterParams params, std::vector<std::unique_ptr<WeakLearner>> learners,
                std::unique_ptr<VoteCombiner> combiner = nullptr);

  const BoosterParams& params() const { return params_; }

  // Cumulative weight per learner, |w^(i)| for i in [1..N].
  const std::vector<double>& cum_weights() const { return cum_weights_; }
  // Same sequence extended by |w^(N+1)|.
  std::vector<double> cum_weights_extended() const;

  CoverageReport coverage(double delta) const;

  void set_logging(bool on) { logging_ = on; }
  const RoundLog& last_round_log() const { return last_log_; }

  VoteCombiner* combiner() { return combiner_.get(); }

 protected:
  int do_predict(const SparseVector& x) override;
  void do_update(const SparseVector& x, int label) override;

 private:
  BoosterParams params_;
  std::vector<std::unique_ptr<WeakLearner>> learners_;
  std::unique_ptr<VoteCombiner> combiner_;
  std::vector<double> cum_weights_;            // size N
  double cum_next_weight_ = 0.0;               // running |w^(N+1)|
  std::vector<std::int64_t> margin_violations_;  // per prefix level, counted via z <= 0
  std::vector<double> cached_preds_;
  bool logging_ = false;
  RoundLog last_log_;
};

}  // namespace osboost
