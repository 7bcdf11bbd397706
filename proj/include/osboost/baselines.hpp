#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "osboost/rng.hpp"
#include "osboost/smooth_boost.hpp"
#include "osboost/weak_learners.hpp"

namespace osboost {

// One weak learner trained at unit weight; the trivial baseline.
class SingleLearnerBooster final : public OnlineBooster {
 public:
  explicit SingleLearnerBooster(WeakKind kind) : learner_(make_weak_learner(kind)) {}

  const WeakLearner& learner() const { return *learner_; }

 protected:
  int do_predict(const SparseVector& x) override {
    return sign01(learner_->predict(x));
  }
  void do_update(const SparseVector& x, int label) override {
    learner_->update(x, label, 1.0);
  }

 private:
  std::unique_ptr<WeakLearner> learner_;
};

// Online AdaBoost of Oza & Russell: each example flows through the learner
// chain with a Poisson(lambda) repetition count, lambda rising on mistakes
// and falling on hits so later learners focus on what earlier ones missed.
// Votes are log((1 - eps)/eps) weighted signs. eps is clamped away from
// {0, 1} because both branches divide by it.
class OzaBoost final : public OnlineBooster {
 public:
  OzaBoost(int n_learners, WeakKind weak_kind, std::uint64_t seed);

  // Test hook: force every Poisson draw to a fixed count.
  void force_poisson(std::optional<std::uint64_t> k) { forced_poisson_ = k; }

  const std::vector<double>& lambda_correct() const { return lambda_sc_; }
  const std::vector<double>& lambda_wrong() const { return lambda_sw_; }

  static constexpr double kEpsClamp = 1e-10;

 protected:
  int do_predict(const SparseVector& x) override;
  void do_update(const SparseVector& x, int label) override;

 private:
  double error_estimate(std::size_t i) const;

  std::vector<std::unique_ptr<WeakLearner>> learners_;
  std::vector<double> lambda_sc_;
  std::vector<double> lambda_sw_;
  SplitMix64 rng_;
  std::optional<std::uint64_t> forced_poisson_;
};

}  // namespace osboost
