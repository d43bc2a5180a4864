#pragma once
// Turns an annotated utterance into one dense vector:
//
//   U = U_lexical + U_constructions + U_roles + U_sequence
//
// with each family switchable through the feature mask.
//
//   lexical:       sum over token occurrences of w(token) * label(token)
//   constructions: unit-weight sum of construction labels
//   roles:         sum over (role s, head r) of role-permutation_s(label(r))
//   sequence:      every contiguous pos-label window of triple_length,
//                  encoded by chaining the labels' permutations over a
//                  shared placeholder vector (first label innermost),
//                  all windows summed

#include <span>
#include <string>

#include "hdus/item_memory.hpp"
#include "hdus/record.hpp"
#include "hdus/weighting.hpp"

namespace hdus {

// Name of the shared sequence placeholder in the special namespace.
inline constexpr std::string_view kSequencePlaceholderName = "labelsequence";

class Encoder {
 public:
  // The registry must share the config's seed, dimensionality, and sparsity.
  Encoder(Registry& registry, const EncodingConfig& cfg);

  DenseVector lexical(const UtteranceRecord& rec, const WeightState& weights) const;
  DenseVector constructions(const UtteranceRecord& rec) const;
  DenseVector roles(const UtteranceRecord& rec) const;

  DenseVector label_sequence(std::span<const std::string> pos_labels) const;
  DenseVector label_sequence(std::span<const std::string> pos_labels,
                             std::uint32_t triple_length) const;

  // Sum of exactly the families in the mask (default: the config's mask).
  // Absent annotation layers contribute zero.
  DenseVector utterance(const UtteranceRecord& rec, const WeightState& weights) const;
  DenseVector utterance(const UtteranceRecord& rec, const WeightState& weights,
                        FeatureSet mask) const;

  const EncodingConfig& config() const noexcept { return cfg_; }
  Registry& registry() const noexcept { return *registry_; }

 private:
  Registry* registry_;
  EncodingConfig cfg_;
};

}  // namespace hdus
