#include "osboost/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace osboost {

OzaBoost::OzaBoost(int n_learners, WeakKind weak_kind, std::uint64_t seed) : rng_(seed) {
  if (n_learners < 1) throw std::invalid_argument("OzaBoost: need at least one learner");
  learners_.reserve(static_cast<std::size_t>(n_learners));
  for (int i = 0; i < n_learners; ++i) learners_.push_back(make_weak_learner(weak_kind));
  lambda_sc_.assign(learners_.size(), 0.0);
  lambda_sw_.assign(learners_.size(), 0.0);
}

double OzaBoost::error_estimate(std::size_t i) const {
  const double total = lambda_sc_[i] + lambda_sw_[i];
  // Untouched learners sit at the clamp floor, matching a learner that has
  // been right so far.
  double eps = total > 0.0 ? lambda_sw_[i] / total : 0.0;
  if (eps < kEpsClamp) eps = kEpsClamp;
  if (eps > 1.0 - kEpsClamp) eps = 1.0 - kEpsClamp;
  return eps;
}

int OzaBoost::do_predict(const SparseVector& x) {
  const double sq = x.squared_norm();
  if (sq > (1.0 + 1e-6) * (1.0 + 1e-6))
    throw std::invalid_argument("example norm exceeds the unit ball; ingestion must normalize");
  double vote = 0.0;
  for (std::size_t i = 0; i < learners_.size(); ++i) {
    const double eps = error_estimate(i);
    vote += std::log((1.0 - eps) / eps) * sign01(learners_[i]->predict(x));
  }
  return sign01(vote);
}

void OzaBoost::do_update(const SparseVector& x, int label) {
  double lambda = 1.0;
  for (std::size_t i = 0; i < learners_.size(); ++i) {
    const std::uint64_t k = forced_poisson_ ? *forced_poisson_ : rng_.next_poisson(lambda);
    if (k > 0) learners_[i]->update_repeated(x, label, k);
    const bool correct = sign01(learners_[i]->predict(x)) == label;  // post-update hypothesis
    if (correct) {
      lambda_sc_[i] += lambda;
      lambda /= 2.0 * (1.0 - error_estimate(i));
    } else {
      lambda_sw_[i] += lambda;
      lambda /= 2.0 * error_estimate(i);
    }
  }
}

}  // namespace osboost
