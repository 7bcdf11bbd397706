#pragma once

#include <cstdint>
#include <vector>

#include "osboost/rng.hpp"
#include "osboost/smooth_boost.hpp"

namespace osboost {

// Hinge loss of the voting weights: max{0, theta - sum_i alpha_i * s_i}
// where s_i = y * h^(i)(x).
double hinge_loss(const std::vector<double>& alpha, const std::vector<double>& signed_preds,
                  double theta);

// Euclidean projection onto the probability simplex by sort-and-threshold
// (O(N log N)): sort descending, find the largest rho with
// v_(rho) - (sum_{r<=rho} v_(r) - 1)/rho > 0, subtract that threshold and
// clip at zero.
std::vector<double> project_simplex(const std::vector<double>& v);

// One projected-gradient step on the hinge loss. No-op while the combined
// margin already clears theta.
std::vector<double> ocp_step(const std::vector<double>& alpha,
                             const std::vector<double>& signed_preds, double theta, double eta);

// Prefix-ensemble expert predictions: expert i is the sign of the running
// sum of the first i weak predictions.
std::vector<int> exp_expert_predictions(const std::vector<double>& preds);

// Multiplicative-weights update: experts that disagree with the label are
// multiplied by exp(-eta); the result is renormalized to sum 1 so weights
// cannot underflow over long streams.
std::vector<double> hedge_update(const std::vector<double>& weights,
                                 const std::vector<int>& expert_preds, int label, double eta);

// OSBoost.OCP voting weights: alpha starts uniform on the simplex and takes
// projected-gradient steps with eta_t = 1/sqrt(t) whenever the combined
// margin misses theta.
class OcpCombiner final : public VoteCombiner {
 public:
  explicit OcpCombiner(int n_learners, double theta);

  int vote(const std::vector<double>& preds) override;
  void observe(const std::vector<double>& preds, int label) override;

  const std::vector<double>& alpha() const { return alpha_; }
  double cumulative_hinge_loss() const { return cumulative_loss_; }

 private:
  std::vector<double> alpha_;
  double theta_;
  std::int64_t steps_ = 0;
  double cumulative_loss_ = 0.0;
};

// OSBoost.EXP: Hedge over the N prefix-ensemble experts with the anytime
// schedule eta_t = sqrt(8 ln N / t). The default prediction samples one
// expert in proportion to its weight; deterministic mode takes the sign of
// the weight-summed expert votes instead.
class ExpCombiner final : public VoteCombiner {
 public:
  ExpCombiner(int n_learners, std::uint64_t seed, bool deterministic = false);

  int vote(const std::vector<double>& preds) override;
  void observe(const std::vector<double>& preds, int label) override;

  const std::vector<double>& expert_weights() const { return weights_; }
  const std::vector<std::int64_t>& expert_mistakes() const { return mistakes_; }
  std::int64_t best_expert_mistakes() const;

 private:
  std::vector<double> weights_;
  std::vector<std::int64_t> mistakes_;
  std::vector<int> cached_experts_;
  std::int64_t steps_ = 0;
  SplitMix64 rng_;
  bool deterministic_;
};

}  // namespace osboost
