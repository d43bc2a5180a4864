#include "hdus/record.hpp"

#include <algorithm>
#include <array>

#include "hdus/error.hpp"

namespace hdus {

namespace {

constexpr std::array<std::pair<Feature, std::string_view>, 4> kFeatureNames{{
    {Feature::lexical, "lexical"},
    {Feature::constructions, "constructions"},
    {Feature::roles, "roles"},
    {Feature::sequence, "sequence"},
}};

}  // namespace

void UtteranceRecord::validate() const {
  if (id.empty()) throw RecordError("record has an empty id");
  if (tokens.empty()) throw RecordError("record '" + id + "' has no tokens");
  for (const RoleAssignment& r : roles) {
    if (std::find(tokens.begin(), tokens.end(), r.head) == tokens.end()) {
      throw RecordError("record '" + id + "': role '" + r.role + "' head '" + r.head +
                        "' does not occur among the tokens");
    }
  }
  if (!pos_labels.empty() && pos_labels.size() != tokens.size()) {
    throw RecordError("record '" + id + "': " + std::to_string(pos_labels.size()) +
                      " pos labels for " + std::to_string(tokens.size()) + " tokens");
  }
}

FeatureSet FeatureSet::from_bits(std::uint8_t bits) {
  if ((bits & ~all().bits()) != 0) throw ConfigError("unknown feature-family bits");
  FeatureSet fs;
  fs.bits_ = bits;
  return fs;
}

FeatureSet FeatureSet::parse(std::string_view csv) {
  FeatureSet fs;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view part =
        csv.substr(start, comma == std::string_view::npos ? csv.size() - start : comma - start);
    if (!part.empty()) {
      bool known = false;
      for (const auto& [feature, name] : kFeatureNames) {
        if (part == name) {
          fs.bits_ |= static_cast<std::uint8_t>(feature);
          known = true;
          break;
        }
      }
      if (!known) throw ConfigError("unknown feature family '" + std::string(part) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fs.empty()) throw ConfigError("feature set must name at least one family");
  return fs;
}

std::string FeatureSet::to_string() const {
  std::string out;
  for (const auto& [feature, name] : kFeatureNames) {
    if (contains(feature)) {
      if (!out.empty()) out += ',';
      out += name;
    }
  }
  return out;
}

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::two_pass ? "two-pass" : "streaming";
}

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "two-pass" || name == "two_pass") return WeightMode::two_pass;
  if (name == "streaming") return WeightMode::streaming;
  throw ConfigError("unknown weight mode '" + std::string(name) + "'");
}

void EncodingConfig::validate() const {
  if (sparsity < 1) throw SparsityError("sparsity must be at least 1");
  if (2ull * sparsity > dim.value()) {
    throw SparsityError("sparsity too large for dimensionality: 2*" + std::to_string(sparsity) +
                        " > " + std::to_string(dim.value()));
  }
  if (lambda < 1) throw ConfigError("lambda must be a positive integer");
  if (triple_length < 1) throw ConfigError("triple length must be at least 1");
  if (features.empty()) throw ConfigError("feature mask must name at least one family");
}

}  // namespace hdus
