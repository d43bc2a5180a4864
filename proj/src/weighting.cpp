#include "hdus/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hdus {

WeightState::WeightState(std::uint32_t lambda) : lambda_(lambda) {
  if (lambda < 1) throw ConfigError("weighting lambda must be a positive integer");
}

void WeightState::observe(const FeatureKey& key, std::uint64_t times) {
  if (times == 0) return;
  counts_[key] += times;
}

double WeightState::weight(const FeatureKey& key) const {
  if (counts_.empty()) {
    throw ConfigError("weight() on an empty state: no observations recorded");
  }
  const auto it = counts_.find(key);
  const double f = it == counts_.end() ? 0.0 : static_cast<double>(it->second);
  const double w =
      std::exp(-static_cast<double>(lambda_) * f / static_cast<double>(counts_.size()));
  // exp underflows to 0 once lambda*f/V passes ~745; the weight itself is
  // defined to stay positive, so clamp at the smallest normal double.
  return std::max(w, std::numeric_limits<double>::min());
}

std::uint64_t WeightState::count(const FeatureKey& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

void WeightState::merge(const WeightState& other) {
  if (other.lambda_ != lambda_) throw ConfigError("cannot merge weight states with different lambda");
  for (const auto& [key, n] : other.counts_) counts_[key] += n;
}

std::vector<std::pair<FeatureKey, std::uint64_t>> WeightState::sorted_counts() const {
  std::vector<std::pair<FeatureKey, std::uint64_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace hdus
