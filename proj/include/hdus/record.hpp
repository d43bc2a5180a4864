#pragma once
// Annotated input unit, the feature-family mask, and the encoding
// configuration shared by encoder, store, and CLI.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hdus/types.hpp"

namespace hdus {

struct RoleAssignment {
  std::string role;  // e.g. "subject", "adverbial"
  std::string head;  // head word; must occur among the record's tokens

  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};

// One utterance with optional annotation layers. tokens is never empty;
// pos_labels, when present, has exactly one label per token.
struct UtteranceRecord {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<std::string> constructions;
  std::vector<RoleAssignment> roles;
  std::vector<std::string> pos_labels;

  void validate() const;  // throws RecordError

  friend bool operator==(const UtteranceRecord&, const UtteranceRecord&) = default;
};

enum class Feature : std::uint8_t {
  lexical = 1,
  constructions = 2,
  roles = 4,
  sequence = 8,
};

// Set of feature families, e.g. which families a probe encodes.
class FeatureSet {
 public:
  constexpr FeatureSet() noexcept = default;
  constexpr FeatureSet(std::initializer_list<Feature> fs) noexcept {
    for (Feature f : fs) bits_ |= static_cast<std::uint8_t>(f);
  }

  static constexpr FeatureSet all() noexcept {
    return {Feature::lexical, Feature::constructions, Feature::roles, Feature::sequence};
  }
  static FeatureSet from_bits(std::uint8_t bits);     // throws ConfigError on unknown bits
  static FeatureSet parse(std::string_view csv);      // "lexical,roles"; throws ConfigError

  constexpr bool contains(Feature f) const noexcept {
    return (bits_ & static_cast<std::uint8_t>(f)) != 0;
  }
  constexpr bool subset_of(FeatureSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }

  std::string to_string() const;  // canonical comma-joined names

  friend constexpr bool operator==(FeatureSet, FeatureSet) noexcept = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class WeightMode : std::uint8_t {
  two_pass = 0,   // freeze counts over the whole corpus, then encode
  streaming = 1,  // observe and encode in one pass; vectors depend on input order
};

std::string_view to_string(WeightMode mode);
WeightMode parse_weight_mode(std::string_view name);  // "two-pass" | "streaming"

struct EncodingConfig {
  Dimensionality dim{};
  std::uint32_t sparsity = kDefaultSparsity;
  std::uint32_t lambda = 60;
  std::uint64_t seed = 0;
  std::uint32_t triple_length = 3;
  WeightMode weight_mode = WeightMode::two_pass;
  FeatureSet features = FeatureSet::all();

  void validate() const;  // throws ConfigError / SparsityError
};

}  // namespace hdus
