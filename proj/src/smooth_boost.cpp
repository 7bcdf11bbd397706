#include "osboost/smooth_boost.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace osboost {

BoosterParams BoosterParams::make(int n_learners, double gamma, double delta) {
  if (n_learners < 1) throw std::invalid_argument("n_learners must be >= 1");
  if (!(gamma > 0.0 && gamma < 0.5)) throw std::invalid_argument("gamma must be in (0, 1/2)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  BoosterParams p;
  p.n_learners = n_learners;
  p.gamma = gamma;
  p.theta = gamma / (2.0 + gamma);
  p.delta = delta;
  return p;
}

double smooth_weight(double z, double gamma) {
  const double w = std::exp(0.5 * z * std::log1p(-gamma));
  if (w >= 1.0) return 1.0;
  return w > std::numeric_limits<double>::min() ? w : std::numeric_limits<double>::min();
}

double prefix_vote(const std::vector<double>& preds, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > preds.size())
    throw std::out_of_range("prefix_vote: level out of range");
  double s = 0.0;
  for (int j = 0; j < i; ++j) s += preds[static_cast<std::size_t>(j)];
  return s / static_cast<double>(i);
}

int UniformCombiner::vote(const std::vector<double>& preds) {
  double s = 0.0;
  for (double p : preds) s += p;
  return sign01(s);
}

// ---------------------------------------------------------------------------
// OnlineBooster protocol

int OnlineBooster::predict(const SparseVector& x) {
  if (prediction_pending_)
    throw std::logic_error("predict() called twice without an intervening update()");
  last_prediction_ = do_predict(x);
  prediction_pending_ = true;
  return last_prediction_;
}

void OnlineBooster::update(const SparseVector& x, int label) {
  validate_label(label);
  if (!prediction_pending_)
    throw std::logic_error("update() called before predict(); the label would leak");
  prediction_pending_ = false;
  do_update(x, label);
  ++examples_seen_;
}

int OnlineBooster::process(const SparseVector& x, int label) {
  const int p = predict(x);
  update(x, label);
  return p;
}

// ---------------------------------------------------------------------------
// SmoothBooster

namespace {

std::vector<std::unique_ptr<WeakLearner>> build_learners(WeakKind kind, int n) {
  std::vector<std::unique_ptr<WeakLearner>> learners;
  learners.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) learners.push_back(make_weak_learner(kind));
  return learners;
}

}  // namespace

SmoothBooster::SmoothBooster(BoosterParams params, WeakKind weak_kind,
                             std::unique_ptr<VoteCombiner> combiner)
    : SmoothBooster(params, build_learners(weak_kind, params.n_learners), std::move(combiner)) {}

SmoothBooster::SmoothBooster(BoosterParams params,
                             std::vector<std::unique_ptr<WeakLearner>> learners,
                             std::unique_ptr<VoteCombiner> combiner)
    : params_(params),
      learners_(std::move(learners)),
      combiner_(combiner ? std::move(combiner) : std::make_unique<UniformCombiner>()) {
  if (learners_.size() != static_cast<std::size_t>(params_.n_learners))
    throw std::invalid_argument("learner count does not match params.n_learners");
  cum_weights_.assign(learners_.size(), 0.0);
  margin_violations_.assign(learners_.size(), 0);
  cached_preds_.assign(learners_.size(), 0.0);
}

int SmoothBooster::do_predict(const SparseVector& x) {
  const double sq = x.squared_norm();
  if (sq > (1.0 + 1e-6) * (1.0 + 1e-6))
    throw std::invalid_argument("example norm exceeds the unit ball; ingestion must normalize");
  for (std::size_t i = 0; i < learners_.size(); ++i) cached_preds_[i] = learners_[i]->predict(x);
  return combiner_->vote(cached_preds_);
}

void SmoothBooster::do_update(const SparseVector& x, int label) {
  combiner_->observe(cached_preds_, label);

  const std::size_t n = learners_.size();
  if (logging_) {
    last_log_.t = examples_seen_ + 1;
    last_log_.label = label;
    last_log_.prediction = last_prediction_;
    last_log_.weights.assign(n, 0.0);
    last_log_.raw_preds = cached_preds_;
    last_log_.prefix_margins.assign(n, 0.0);
  }

  double z = 0.0;
  double w = 1.0;
  double prefix_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    learners_[i]->update(x, label, w);
    cum_weights_[i] += w;
    if (logging_) last_log_.weights[i] = w;

    z += label * cached_preds_[i] - params_.theta;
    // z^(i) <= 0 is exactly the prefix-margin-at-most-theta condition
    // y * f^(i)(x) <= theta. Counting violations off the same accumulator
    // that drives the weights keeps `violations(i) <= |w^(i+1)|` exact
    // even in floating point: z <= 0 forces the next weight to 1.
    if (z <= 0.0) ++margin_violations_[i];
    prefix_sum += cached_preds_[i];
    if (logging_) last_log_.prefix_margins[i] = label * prefix_sum / static_cast<double>(i + 1);

    w = smooth_weight(z, params_.gamma);
  }
  cum_next_weight_ += w;
  if (logging_) last_log_.next_weight = w;
}

std::vector<double> SmoothBooster::cum_weights_extended() const {
  std::vector<double> ext = cum_weights_;
  ext.push_back(cum_next_weight_);
  return ext;
}

namespace {

CoverageReport coverage_from_counters(const std::vector<double>& cum_ext,
                                  const std::vector<std::int64_t>& violations,
                                  std::int64_t examples, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  CoverageReport report;
  report.examples = examples;
  report.delta = delta;
  const double bar = delta * static_cast<double>(examples);
  // First index (1-based, through N+1) whose cumulative weight fell below
  // delta*T; the prefix just before it is the certified level.
  std::size_t first_light = 0;
  for (std::size_t i = 0; i < cum_ext.size(); ++i) {
    if (cum_ext[i] < bar) {
      first_light = i + 1;
      break;
    }
  }
  if (first_light <= 1) {
    // Either no weight sum dropped below delta*T yet (vacuous) or T == 0.
    report.level = 0;
    report.margin_violations = 0;
    report.holds = true;
    return report;
  }
  report.level = static_cast<int>(first_light - 1);
  report.margin_violations = violations[first_light - 2];
  report.holds = static_cast<double>(report.margin_violations) < bar;
  return report;
}

}  // namespace

CoverageReport SmoothBooster::coverage(double delta) const {
  return coverage_from_counters(cum_weights_extended(), margin_violations_, examples_seen_, delta);
}

CoverageReport coverage_check(const std::vector<RoundLog>& logs,
                          const std::vector<double>& cum_weights_extended, double delta,
                          double theta) {
  if (logs.empty()) throw std::invalid_argument("coverage_check: no logged rounds");
  const std::size_t n = logs.front().raw_preds.size();
  std::vector<std::int64_t> violations(n, 0);
  for (const RoundLog& log : logs) {
    // Re-run the z recursion from the logged raw predictions with the same
    // arithmetic the booster uses, so counts agree bit for bit.
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      z += log.label * log.raw_preds[i] - theta;
      if (z <= 0.0) ++violations[i];
    }
  }
  return coverage_from_counters(cum_weights_extended, violations,
                              static_cast<std::int64_t>(logs.size()), delta);
}

}  // namespace osboost
