#include "osboost/weak_learners.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace osboost {

namespace {

void check_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("example weight must be in [0, 1]");
}

}  // namespace

// ---------------------------------------------------------------------------
// Perceptron

double Perceptron::predict(const SparseVector& x) const {
  return static_cast<double>(sign01(dot(h_, x)));
}

void Perceptron::update(const SparseVector& x, int label, double weight) {
  validate_label(label);
  check_weight(weight);
  if (label * dot(h_, x) <= 0.0) h_.add_scaled(x, weight * label);
}

std::unique_ptr<WeakLearner> Perceptron::clone() const {
  return std::make_unique<Perceptron>(*this);
}

// ---------------------------------------------------------------------------
// OcpLinearLearner

double OcpLinearLearner::predict(const SparseVector& x) const {
  const double v = dot(h_, x);
  return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v);
}

void OcpLinearLearner::update(const SparseVector& x, int label, double weight) {
  validate_label(label);
  check_weight(weight);
  ++steps_;  // counts every presented example, even zero-weight ones
  if (weight == 0.0) return;
  const double eta = 1.0 / std::sqrt(static_cast<double>(steps_));
  h_.add_scaled(x, eta * weight * label);
  const double n = h_.norm();
  if (n > 1.0) h_.scale(1.0 / n);
}

std::unique_ptr<WeakLearner> OcpLinearLearner::clone() const {
  return std::make_unique<OcpLinearLearner>(*this);
}

// ---------------------------------------------------------------------------
// GaussianNaiveBayes

void GaussianNaiveBayes::update(const SparseVector& x, int label, double weight) {
  validate_label(label);
  check_weight(weight);
  accumulate(x, label, weight);
}

void GaussianNaiveBayes::update_repeated(const SparseVector& x, int label, std::uint64_t times) {
  validate_label(label);
  accumulate(x, label, static_cast<double>(times));
}

void GaussianNaiveBayes::accumulate(const SparseVector& x, int label, double weight) {
  if (weight == 0.0) return;
  (label > 0 ? prior_pos_ : prior_neg_) += weight;
  for (const auto& [index, value] : x.entries()) {
    FeatureStats& fs = label > 0 ? stats_[index].pos : stats_[index].neg;
    fs.sum_wv += weight * value;
    fs.sum_wv2 += weight * value * value;
    fs.sum_w += weight;
  }
}

double GaussianNaiveBayes::log_likelihood(const SparseVector& x, int label) const {
  const double class_weight = prior_weight(label);
  assert(class_weight > 0.0);
  constexpr double kLog2Pi = 1.8378770664093454836;
  double ll = 0.0;
  // Score every feature the model has seen. Features only present in the
  // query contribute identical terms to both classes and cancel, so they
  // are skipped.
  auto xe = x.entries().begin();
  for (const auto& [index, per_label] : stats_) {
    while (xe != x.entries().end() && xe->first < index) ++xe;
    const double v = (xe != x.entries().end() && xe->first == index) ? xe->second : 0.0;
    const FeatureStats& fs = label > 0 ? per_label.pos : per_label.neg;
    const double mean = fs.sum_wv / class_weight;
    double var = fs.sum_wv2 / class_weight - mean * mean;
    if (var < kVarianceFloor) var = kVarianceFloor;
    const double d = v - mean;
    ll += -0.5 * (kLog2Pi + std::log(var)) - d * d / (2.0 * var);
  }
  return ll;
}

double GaussianNaiveBayes::predict(const SparseVector& x) const {
  // Add-1 smoothing on the class prior weights; a class that has absorbed
  // no weight contributes no likelihood term and only the smoothed priors
  // decide.
  const double total = prior_pos_ + prior_neg_;
  double score = std::log((prior_pos_ + 1.0) / (total + 2.0)) -
                 std::log((prior_neg_ + 1.0) / (total + 2.0));
  if (prior_pos_ > 0.0) score += log_likelihood(x, +1);
  if (prior_neg_ > 0.0) score -= log_likelihood(x, -1);
  return static_cast<double>(sign01(score));
}

std::unique_ptr<WeakLearner> GaussianNaiveBayes::clone() const {
  return std::make_unique<GaussianNaiveBayes>(*this);
}

// ---------------------------------------------------------------------------

std::unique_ptr<WeakLearner> make_weak_learner(WeakKind kind) {
  switch (kind) {
    case WeakKind::kPerceptron:
      return std::make_unique<Perceptron>();
    case WeakKind::kNaiveBayes:
      return std::make_unique<GaussianNaiveBayes>();
    case WeakKind::kOcpLinear:
      return std::make_unique<OcpLinearLearner>();
  }
  throw std::logic_error("unknown weak learner kind");
}

WeakKind weak_kind_from_name(const std::string& name) {
  if (name == "perceptron") return WeakKind::kPerceptron;
  if (name == "naive-bayes") return WeakKind::kNaiveBayes;
  if (name == "ocp-linear") return WeakKind::kOcpLinear;
  throw std::invalid_argument("unknown weak learner: " + name);
}

std::string weak_kind_name(WeakKind kind) {
  switch (kind) {
    case WeakKind::kPerceptron:
      return "perceptron";
    case WeakKind::kNaiveBayes:
      return "naive-bayes";
    case WeakKind::kOcpLinear:
      return "ocp-linear";
  }
  return "?";
}

}  // namespace osboost
