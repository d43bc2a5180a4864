#pragma once
// Streaming vocabulary statistics behind the frequency weight
//   w(l) = exp(-lambda * f(l) / V)
// where f(l) is the observed count of key l and V the number of distinct
// keys seen so far. Weights approach 0 for very frequent keys and 1 for
// rare or unseen ones.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdus/item_memory.hpp"

namespace hdus {

class WeightState {
 public:
  explicit WeightState(std::uint32_t lambda);

  void observe(const FeatureKey& key, std::uint64_t times = 1);

  // exp(-lambda * f / V); unseen keys have f = 0 and weight exactly 1.
  // Throws ConfigError while no observation has been recorded (V = 0).
  double weight(const FeatureKey& key) const;

  std::uint64_t count(const FeatureKey& key) const;
  std::size_t vocab_size() const noexcept { return counts_.size(); }
  std::uint32_t lambda() const noexcept { return lambda_; }

  // Combine per-shard counts.
  void merge(const WeightState& other);

  // Sorted by (namespace, name).
  std::vector<std::pair<FeatureKey, std::uint64_t>> sorted_counts() const;

 private:
  std::uint32_t lambda_;
  std::unordered_map<FeatureKey, std::uint64_t, FeatureKeyHash> counts_;
};

}  // namespace hdus
