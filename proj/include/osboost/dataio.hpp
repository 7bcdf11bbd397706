#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "osboost/core.hpp"

namespace osboost {

// Parse failure carrying the 1-based line number of the offending record.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Maps raw integer label tokens to {-1, +1}. Labels -1/+1 pass through by
// default; anything else must be mapped explicitly (several repository
// files use {1,2} or {2,4}), never guessed.
class LabelMap {
 public:
  LabelMap() = default;

  void add(long long raw, int mapped);
  int apply(long long raw, std::size_t line) const;
  bool empty() const { return mapping_.empty(); }

  // Parses "RAW:PM,RAW:PM", e.g. "2:-1,4:+1".
  static LabelMap parse(const std::string& spec);

 private:
  std::map<long long, int> mapping_;
};

struct Dataset {
  std::vector<Example> examples;
  std::string name;
  FeatureIndex dimension = 0;  // max feature index seen

  std::size_t size() const { return examples.size(); }
};

// Parses one LIBSVM record "<label> <idx>:<val> ...". No normalization.
// Errors: malformed tokens, duplicate indices, and unmapped labels each
// throw a ParseError naming `line`.
Example parse_libsvm_line(const std::string& line, const LabelMap& label_map,
                          std::size_t line_number);

// "<label> <idx>:<val> ..." for one example; inverse of the parser.
std::string serialize_libsvm_line(const Example& example);

// Per-example rescale onto the unit L2 ball: vectors with norm > 1 shrink
// to norm 1, everything else is untouched. A global scaling constant would
// need a pass over the full stream, which an online learner does not get.
SparseVector normalize_unit_ball(const SparseVector& x);

// Streams a LIBSVM file line by line, applying the label map and unit-ball
// normalization. Blank lines are skipped.
Dataset load_libsvm_file(const std::string& path, const LabelMap& label_map,
                         const std::string& name = "");

// Same, from any istream (used by tests and by stdin ingestion).
Dataset load_libsvm_stream(std::istream& in, const LabelMap& label_map,
                           const std::string& name = "");

// Fisher-Yates permutation driven by SplitMix64; a seed reproduces the same
// order on every platform.
Dataset shuffle(const Dataset& dataset, std::uint64_t seed);

}  // namespace osboost
