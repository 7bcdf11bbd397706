#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "osboost/core.hpp"

namespace osboost {

// Contract shared by every online weak learner:
//   - predict(x) is in [-1, 1] and does not change state,
//   - update(x, y, w) consumes one example with weight w in [0, 1].
// Boosters always call predict before update so margins are computed with
// the pre-update hypothesis.
class WeakLearner {
 public:
  virtual ~WeakLearner() = default;
  virtual double predict(const SparseVector& x) const = 0;
  virtual void update(const SparseVector& x, int label, double weight) = 0;
  virtual std::unique_ptr<WeakLearner> clone() const = 0;

  // `times` unit-weight updates on the same example. Sequential learners
  // replay the loop; additive ones may collapse it into one accumulation.
  virtual void update_repeated(const SparseVector& x, int label, std::uint64_t times) {
    for (std::uint64_t i = 0; i < times; ++i) update(x, label, 1.0);
  }
};

// Classic mistake-driven perceptron with the update scaled by the example
// weight: on y<h,x> <= 0, h += w*y*x. Output is the hard sign, so it stays
// in {-1, +1} without norm control.
class Perceptron final : public WeakLearner {
 public:
  double predict(const SparseVector& x) const override;
  void update(const SparseVector& x, int label, double weight) override;
  std::unique_ptr<WeakLearner> clone() const override;

  const SparseVector& hypothesis() const { return h_; }

 private:
  SparseVector h_;
};

// Online projected-gradient linear learner: h += (w*y/sqrt(t)) * x followed
// by rescaling onto the unit L2 ball. The step counter t advances on every
// presented example, weighted or not, so the schedule is a pure function of
// stream position. Prediction is the raw inner product, in [-1, 1] by
// Cauchy-Schwarz for unit-ball inputs.
class OcpLinearLearner final : public WeakLearner {
 public:
  double predict(const SparseVector& x) const override;
  void update(const SparseVector& x, int label, double weight) override;
  std::unique_ptr<WeakLearner> clone() const override;

  const SparseVector& hypothesis() const { return h_; }
  std::int64_t steps() const { return steps_; }

 private:
  SparseVector h_;
  std::int64_t steps_ = 0;
};

// Gaussian naive Bayes over continuous features with weighted sufficient
// statistics. Sparse zeros are real observations: the per-feature mean and
// variance divide by the total class weight, so indices absent from an
// example count as explicit 0.0. Training is a pure accumulation, which
// makes the learner lossless (order-independent) up to rounding.
class GaussianNaiveBayes final : public WeakLearner {
 public:
  struct FeatureStats {
    double sum_wv = 0.0;
    double sum_wv2 = 0.0;
    double sum_w = 0.0;  // weight of examples where the feature was explicit
  };
  struct PerLabelStats {
    FeatureStats pos;
    FeatureStats neg;
  };

  double predict(const SparseVector& x) const override;
  void update(const SparseVector& x, int label, double weight) override;
  // Exact shortcut: k unit updates are one accumulation with weight k.
  void update_repeated(const SparseVector& x, int label, std::uint64_t times) override;
  std::unique_ptr<WeakLearner> clone() const override;

  double prior_weight(int label) const { return label > 0 ? prior_pos_ : prior_neg_; }
  const std::map<FeatureIndex, PerLabelStats>& feature_stats() const { return stats_; }

  static constexpr double kVarianceFloor = 1e-3;

 private:
  double log_likelihood(const SparseVector& x, int label) const;
  void accumulate(const SparseVector& x, int label, double weight);

  double prior_pos_ = 0.0;
  double prior_neg_ = 0.0;
  std::map<FeatureIndex, PerLabelStats> stats_;
};

enum class WeakKind { kPerceptron, kNaiveBayes, kOcpLinear };

std::unique_ptr<WeakLearner> make_weak_learner(WeakKind kind);
WeakKind weak_kind_from_name(const std::string& name);
std::string weak_kind_name(WeakKind kind);

}  // namespace osboost
