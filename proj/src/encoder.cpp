#include "hdus/encoder.hpp"

#include <algorithm>
#include <tuple>

#include "hdus/ops.hpp"

namespace hdus {

namespace {

void add_label(DenseVector& acc, const TernaryLabel& label, double w) {
  for (auto i : label.plus_positions()) acc[i] += w;
  for (auto i : label.minus_positions()) acc[i] -= w;
}

void add_vector(DenseVector& acc, const DenseVector& v) {
  for (std::uint32_t i = 0; i < acc.dim(); ++i) acc[i] += v[i];
}

// Accumulation happens in sorted order so that reordering a record's
// annotation lists reproduces the same sums bit for bit.
std::vector<std::string> sorted(const std::vector<std::string>& names) {
  std::vector<std::string> out = names;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Encoder::Encoder(Registry& registry, const EncodingConfig& cfg) : registry_(&registry), cfg_(cfg) {
  cfg_.validate();
  if (registry.seed() != cfg.seed || registry.dim() != cfg.dim ||
      registry.sparsity() != cfg.sparsity) {
    throw ConfigError("encoder config does not match the registry's seed/dimension/sparsity");
  }
}

DenseVector Encoder::lexical(const UtteranceRecord& rec, const WeightState& weights) const {
  rec.validate();
  DenseVector acc(cfg_.dim);
  for (const std::string& token : sorted(rec.tokens)) {
    const FeatureKey key{Namespace::lexical, token};
    add_label(acc, registry_->label(key), weights.weight(key));
  }
  return acc;
}

DenseVector Encoder::constructions(const UtteranceRecord& rec) const {
  DenseVector acc(cfg_.dim);
  for (const std::string& name : sorted(rec.constructions)) {
    add_label(acc, registry_->label({Namespace::construction, name}), 1.0);
  }
  return acc;
}

DenseVector Encoder::roles(const UtteranceRecord& rec) const {
  rec.validate();
  std::vector<RoleAssignment> assignments = rec.roles;
  std::sort(assignments.begin(), assignments.end(), [](const auto& a, const auto& b) {
    return std::tie(a.role, a.head) < std::tie(b.role, b.head);
  });
  DenseVector acc(cfg_.dim);
  for (const RoleAssignment& r : assignments) {
    const PermutationMap& p = registry_->permutation({Namespace::role, r.role});
    const TernaryLabel& head = registry_->label({Namespace::lexical, r.head});
    add_label(acc, permute(p, head), 1.0);
  }
  return acc;
}

DenseVector Encoder::label_sequence(std::span<const std::string> pos_labels) const {
  return label_sequence(pos_labels, cfg_.triple_length);
}

DenseVector Encoder::label_sequence(std::span<const std::string> pos_labels,
                                    std::uint32_t triple_length) const {
  if (triple_length < 1) throw ConfigError("triple length must be at least 1");
  DenseVector acc(cfg_.dim);
  if (pos_labels.size() < triple_length) return acc;  // too short: nothing to encode

  const DenseVector& base =
      registry_->dense_placeholder({Namespace::special, std::string(kSequencePlaceholderName)});
  for (std::size_t start = 0; start + triple_length <= pos_labels.size(); ++start) {
    DenseVector window = base;
    for (std::size_t offset = 0; offset < triple_length; ++offset) {
      window = permute(registry_->permutation({Namespace::pos_label, pos_labels[start + offset]}),
                       window);
    }
    add_vector(acc, window);
  }
  return acc;
}

DenseVector Encoder::utterance(const UtteranceRecord& rec, const WeightState& weights) const {
  return utterance(rec, weights, cfg_.features);
}

DenseVector Encoder::utterance(const UtteranceRecord& rec, const WeightState& weights,
                               FeatureSet mask) const {
  if (mask.empty()) throw ConfigError("utterance encoding needs a non-empty feature mask");
  rec.validate();
  DenseVector acc(cfg_.dim);
  if (mask.contains(Feature::lexical)) add_vector(acc, lexical(rec, weights));
  if (mask.contains(Feature::constructions)) add_vector(acc, constructions(rec));
  if (mask.contains(Feature::roles)) add_vector(acc, roles(rec));
  if (mask.contains(Feature::sequence)) add_vector(acc, label_sequence(rec.pos_labels));
  return acc;
}

}  // namespace hdus
