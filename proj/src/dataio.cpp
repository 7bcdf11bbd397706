#include "osboost/dataio.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "osboost/rng.hpp"

namespace osboost {

void LabelMap::add(long long raw, int mapped) {
  validate_label(mapped);
  auto [it, inserted] = mapping_.emplace(raw, mapped);
  if (!inserted && it->second != mapped)
    throw std::invalid_argument("label map: conflicting entries for raw label " +
                                std::to_string(raw));
  it->second = mapped;
}

int LabelMap::apply(long long raw, std::size_t line) const {
  auto it = mapping_.find(raw);
  if (it != mapping_.end()) return it->second;
  if (raw == 1 || raw == -1) return static_cast<int>(raw);
  throw ParseError(line, "unmapped label " + std::to_string(raw) +
                             " (provide a label map such as \"" + std::to_string(raw) + ":+1\")");
}

LabelMap LabelMap::parse(const std::string& spec) {
  LabelMap map;
  if (spec.empty()) return map;
  std::stringstream ss(spec);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("label map entry \"" + pair + "\" is not RAW:PM");
    try {
      const long long raw = std::stoll(pair.substr(0, colon));
      const int mapped = std::stoi(pair.substr(colon + 1));
      map.add(raw, mapped);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("label map entry \"" + pair + "\" is not numeric");
    }
  }
  return map;
}

namespace {

// Label tokens are numeric ("+1", "-1", "2", sometimes "1.0"); fractional
// values are malformed.
long long parse_label_token(const std::string& token, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE)
    throw ParseError(line, "malformed label token \"" + token + "\"");
  const double rounded = std::nearbyint(v);
  if (rounded != v) throw ParseError(line, "non-integer label \"" + token + "\"");
  return static_cast<long long>(rounded);
}

}  // namespace

Example parse_libsvm_line(const std::string& line, const LabelMap& label_map,
                          std::size_t line_number) {
  std::istringstream in(line);
  std::string token;
  if (!(in >> token)) throw ParseError(line_number, "empty record");

  Example example;
  example.label = label_map.apply(parse_label_token(token, line_number), line_number);

  std::vector<SparseVector::Entry> entries;
  std::vector<FeatureIndex> seen;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
      throw ParseError(line_number, "malformed feature token \"" + token + "\"");

    errno = 0;
    char* end = nullptr;
    const std::string idx_str = token.substr(0, colon);
    const long long idx = std::strtoll(idx_str.c_str(), &end, 10);
    if (end == idx_str.c_str() || *end != '\0' || errno == ERANGE || idx < 1 ||
        idx > std::numeric_limits<FeatureIndex>::max())
      throw ParseError(line_number, "malformed feature index in \"" + token + "\"");

    errno = 0;
    const std::string val_str = token.substr(colon + 1);
    const double value = std::strtod(val_str.c_str(), &end);
    if (end == val_str.c_str() || *end != '\0' || errno == ERANGE)
      throw ParseError(line_number, "malformed feature value in \"" + token + "\"");

    for (FeatureIndex s : seen)
      if (s == static_cast<FeatureIndex>(idx))
        throw ParseError(line_number, "duplicate feature index " + std::to_string(idx));
    seen.push_back(static_cast<FeatureIndex>(idx));
    if (value != 0.0) entries.emplace_back(static_cast<FeatureIndex>(idx), value);
  }
  example.features = SparseVector(std::move(entries));
  return example;
}

std::string serialize_libsvm_line(const Example& example) {
  std::ostringstream out;
  out << (example.label > 0 ? "+1" : "-1");
  out.precision(17);
  for (const auto& [index, value] : example.features.entries()) out << ' ' << index << ':' << value;
  return out.str();
}

SparseVector normalize_unit_ball(const SparseVector& x) {
  const double n = x.norm();
  if (n <= 1.0) return x;
  SparseVector scaled = x;
  scaled.scale(1.0 / n);
  return scaled;
}

Dataset load_libsvm_stream(std::istream& in, const LabelMap& label_map, const std::string& name) {
  Dataset dataset;
  dataset.name = name;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Example example = parse_libsvm_line(line, label_map, line_number);
    example.features = normalize_unit_ball(example.features);
    dataset.dimension = std::max(dataset.dimension, example.features.max_index());
    dataset.examples.push_back(std::move(example));
  }
  return dataset;
}

Dataset load_libsvm_file(const std::string& path, const LabelMap& label_map,
                         const std::string& name) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::string display = name;
  if (display.empty()) {
    const auto slash = path.find_last_of('/');
    display = slash == std::string::npos ? path : path.substr(slash + 1);
  }
  return load_libsvm_stream(in, label_map, display);
}

Dataset shuffle(const Dataset& dataset, std::uint64_t seed) {
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  Dataset shuffled;
  shuffled.name = dataset.name;
  shuffled.dimension = dataset.dimension;
  shuffled.examples.reserve(dataset.size());
  for (std::size_t idx : order) shuffled.examples.push_back(dataset.examples[idx]);
  return shuffled;
}

}  // namespace osboost
