#include "osboost/combiners.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace osboost {

double hinge_loss(const std::vector<double>& alpha, const std::vector<double>& signed_preds,
                  double theta) {
  if (alpha.size() != signed_preds.size())
    throw std::invalid_argument("hinge_loss: size mismatch");
  const double margin = std::inner_product(alpha.begin(), alpha.end(), signed_preds.begin(), 0.0);
  return std::max(0.0, theta - margin);
}

std::vector<double> project_simplex(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("project_simplex: empty input");
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double running = 0.0;
  double tau = 0.0;
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    running += sorted[r];
    const double candidate = (running - 1.0) / static_cast<double>(r + 1);
    if (sorted[r] - candidate > 0.0) tau = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - tau, 0.0);
  return out;
}

std::vector<double> ocp_step(const std::vector<double>& alpha,
                             const std::vector<double>& signed_preds, double theta, double eta) {
  if (alpha.size() != signed_preds.size()) throw std::invalid_argument("ocp_step: size mismatch");
  const double margin = std::inner_product(alpha.begin(), alpha.end(), signed_preds.begin(), 0.0);
  if (margin >= theta) return alpha;
  std::vector<double> moved(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) moved[i] = alpha[i] + eta * signed_preds[i];
  return project_simplex(moved);
}

std::vector<int> exp_expert_predictions(const std::vector<double>& preds) {
  std::vector<int> experts(preds.size());
  double running = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    running += preds[i];
    experts[i] = sign01(running);
  }
  return experts;
}

std::vector<double> hedge_update(const std::vector<double>& weights,
                                 const std::vector<int>& expert_preds, int label, double eta) {
  if (weights.size() != expert_preds.size())
    throw std::invalid_argument("hedge_update: size mismatch");
  std::vector<double> out(weights.size());
  const double penalty = std::exp(-eta);
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out[i] = expert_preds[i] == label ? weights[i] : weights[i] * penalty;
    total += out[i];
  }
  for (double& w : out) w /= total;
  return out;
}

// ---------------------------------------------------------------------------
// OcpCombiner

OcpCombiner::OcpCombiner(int n_learners, double theta) : theta_(theta) {
  if (n_learners < 1) throw std::invalid_argument("OcpCombiner: need at least one learner");
  alpha_.assign(static_cast<std::size_t>(n_learners), 1.0 / n_learners);
}

int OcpCombiner::vote(const std::vector<double>& preds) {
  const double f = std::inner_product(alpha_.begin(), alpha_.end(), preds.begin(), 0.0);
  return sign01(f);
}

void OcpCombiner::observe(const std::vector<double>& preds, int label) {
  ++steps_;
  std::vector<double> signed_preds(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) signed_preds[i] = label * preds[i];
  cumulative_loss_ += hinge_loss(alpha_, signed_preds, theta_);
  const double eta = 1.0 / std::sqrt(static_cast<double>(steps_));
  alpha_ = ocp_step(alpha_, signed_preds, theta_, eta);
}

// ---------------------------------------------------------------------------
// ExpCombiner

ExpCombiner::ExpCombiner(int n_learners, std::uint64_t seed, bool deterministic)
    : rng_(seed), deterministic_(deterministic) {
  if (n_learners < 1) throw std::invalid_argument("ExpCombiner: need at least one learner");
  weights_.assign(static_cast<std::size_t>(n_learners), 1.0 / n_learners);
  mistakes_.assign(static_cast<std::size_t>(n_learners), 0);
}

int ExpCombiner::vote(const std::vector<double>& preds) {
  cached_experts_ = exp_expert_predictions(preds);
  if (deterministic_) {
    double s = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * cached_experts_[i];
    return sign01(s);
  }
  // Sample one expert in proportion to its weight.
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  const double u = rng_.next_double() * total;
  double cdf = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    cdf += weights_[i];
    if (u < cdf) return cached_experts_[i];
  }
  return cached_experts_.back();
}

void ExpCombiner::observe(const std::vector<double>& preds, int label) {
  if (cached_experts_.size() != preds.size()) cached_experts_ = exp_expert_predictions(preds);
  for (std::size_t i = 0; i < cached_experts_.size(); ++i)
    if (cached_experts_[i] != label) ++mistakes_[i];
  ++steps_;
  const double eta =
      std::sqrt(8.0 * std::log(static_cast<double>(weights_.size())) / static_cast<double>(steps_));
  weights_ = hedge_update(weights_, cached_experts_, label, eta);
}

std::int64_t ExpCombiner::best_expert_mistakes() const {
  return *std::min_element(mistakes_.begin(), mistakes_.end());
}

}  // namespace osboost
