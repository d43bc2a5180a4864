#pragma once
// Deterministic registry from feature names to labels and permutations,
// plus a cleanup (associative) memory resolving noisy vectors to the
// nearest stored items.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hdus/types.hpp"

namespace hdus {

enum class Namespace : std::uint8_t {
  lexical = 0,
  construction = 1,
  role = 2,
  pos_label = 3,
  special = 4,
};

std::string_view to_string(Namespace ns);
Namespace parse_namespace(std::string_view name);

// lexical / construction / special carry labels; role / pos_label carry
// permutations.
constexpr bool is_label_namespace(Namespace ns) {
  return ns == Namespace::lexical || ns == Namespace::construction || ns == Namespace::special;
}
constexpr bool is_permutation_namespace(Namespace ns) {
  return ns == Namespace::role || ns == Namespace::pos_label;
}

struct FeatureKey {
  Namespace ns;
  std::string name;

  friend auto operator<=>(const FeatureKey&, const FeatureKey&) = default;
};

struct FeatureKeyHash {
  std::size_t operator()(const FeatureKey& k) const noexcept {
    return std::hash<std::string>{}(k.name) * 31 + static_cast<std::size_t>(k.ns);
  }
};

// Registry of random items, lazily created on first resolution and cached.
// Everything derives from (global_seed, namespace, name), so a registry
// rebuilt from the same seed reproduces every item bit-exactly.
// Single writer on a cache miss, concurrent readers otherwise.
class Registry {
 public:
  Registry(std::uint64_t global_seed, Dimensionality d, std::uint32_t sparsity);

  // Existing or deterministically created label. Label namespaces only.
  const TernaryLabel& label(const FeatureKey& key);

  // Existing or deterministically created permutation. role/pos_label only.
  const PermutationMap& permutation(const FeatureKey& key);

  // Dense placeholder vector for a special-namespace key: random-sign
  // coordinates scaled so its norm equals a label's norm sqrt(2k).
  const DenseVector& dense_placeholder(const FeatureKey& key);

  std::uint64_t seed() const noexcept { return seed_; }
  Dimensionality dim() const noexcept { return d_; }
  std::uint32_t sparsity() const noexcept { return sparsity_; }

  std::size_t size() const;
  std::vector<FeatureKey> keys() const;  // sorted by (namespace, name)

 private:
  std::uint64_t seed_;
  Dimensionality d_;
  std::uint32_t sparsity_;

  mutable std::shared_mutex mutex_;
  std::unordered_map<FeatureKey, std::unique_ptr<TernaryLabel>, FeatureKeyHash> labels_;
  std::unordered_map<FeatureKey, std::unique_ptr<PermutationMap>, FeatureKeyHash> permutations_;
  std::unordered_map<FeatureKey, std::unique_ptr<DenseVector>, FeatureKeyHash> placeholders_;
};

// Exact brute-force associative memory. Entries are identified vectors;
// nearest() ranks by cosine descending, ties by ascending identifier.
class CleanupMemory {
 public:
  explicit CleanupMemory(Dimensionality d) : d_(d) {}

  // Rejects duplicate identifiers, zero vectors, and dimension mismatches.
  void add(std::string id, DenseVector v);

  // min(top_n, size()) results; empty memory yields an empty list.
  std::vector<std::pair<std::string, double>> nearest(const DenseVector& probe,
                                                      std::size_t top_n) const;

  std::size_t size() const noexcept { return entries_.size(); }
  Dimensionality dim() const noexcept { return d_; }

 private:
  struct Entry {
    std::string id;
    DenseVector vec;
    double norm;
  };

  Dimensionality d_;
  std::vector<Entry> entries_;
};

}  // namespace hdus
