#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace osboost {

using FeatureIndex = std::int32_t;

// Fixed sign convention used by every voting rule and weak learner:
// sign01(0) = +1.
inline int sign01(double v) { return v >= 0.0 ? +1 : -1; }

// Sparse feature vector: sorted (index, value) pairs, 1-based LIBSVM
// indices. Canonical form: indices strictly increasing, no stored value is
// exactly zero.
class SparseVector {
 public:
  using Entry = std::pair<FeatureIndex, double>;

  SparseVector() = default;

  SparseVector(std::initializer_list<Entry> entries)
      : SparseVector(std::vector<Entry>(entries)) {}

  explicit SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
      if (entries_[i].first == entries_[i + 1].first)
        throw std::invalid_argument("SparseVector: duplicate feature index");
    }
    for (const Entry& e : entries_) {
      if (e.first < 1) throw std::invalid_argument("SparseVector: feature index must be >= 1");
    }
    drop_zeros();
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Value at index, 0.0 when absent.
  double coeff(FeatureIndex index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, FeatureIndex i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0.0;
  }

  double squared_norm() const {
    double s = 0.0;
    for (const Entry& e : entries_) s += e.second * e.second;
    return s;
  }

  double norm() const { return std::sqrt(squared_norm()); }

  FeatureIndex max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  void scale(double c) {
    if (c == 0.0) {
      entries_.clear();
      return;
    }
    for (Entry& e : entries_) e.second *= c;
  }

  // this += c * x, merging sorted entry lists. Exact cancellations are
  // removed to preserve the canonical form.
  void add_scaled(const SparseVector& x, double c) {
    if (c == 0.0 || x.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + x.entries_.size());
    auto a = entries_.begin();
    auto b = x.entries_.begin();
    while (a != entries_.end() && b != x.entries_.end()) {
      if (a->first < b->first) {
        merged.push_back(*a++);
      } else if (b->first < a->first) {
        merged.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        const double v = a->second + c * b->second;
        if (v != 0.0) merged.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    merged.insert(merged.end(), a, entries_.end());
    for (; b != x.entries_.end(); ++b) merged.emplace_back(b->first, c * b->second);
    entries_ = std::move(merged);
    drop_zeros();
  }

  bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }

 private:
  void drop_zeros() {
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const Entry& e) { return e.second == 0.0; }),
                   entries_.end());
  }

  std::vector<Entry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  double s = 0.0;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

// A labeled example. Labels are strictly -1 or +1; features live in the
// unit L2 ball after ingestion normalization.
struct Example {
  SparseVector features;
  int label = +1;
};

inline void validate_label(int label) {
  if (label != -1 && label != +1) throw std::invalid_argument("label must be -1 or +1");
}

}  // namespace osboost
