#pragma once
// Persistent collection of encoded utterances with exact cosine search and
// feature-subset probing.
//
// File format (binary, little-endian):
//
//   magic   "HDUS"
//   u32     format version (1)
//   u32     dimensionality d
//   u32     label sparsity k
//   u64     global seed
//   u32     lambda
//   u8      weight mode          (0 two-pass, 1 streaming)
//   u8      feature mask bits
//   u8      imported-vectors flag (reserved; must be 0)
//   u32     triple length
//   u64     registry entry count
//           per entry: u8 namespace, str name, u64 count
//   u64     record count
//           per record: str id, str payload, d * f32 coordinates
//
// str = u32 byte length + bytes. Vectors are accumulated in f64 and
// quantised once to f32 when a record is added, so an in-memory store and
// its save/load round trip answer queries identically.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hdus/encoder.hpp"
#include "hdus/item_memory.hpp"
#include "hdus/jsonl.hpp"
#include "hdus/record.hpp"
#include "hdus/weighting.hpp"

namespace hdus {

inline constexpr char kStoreMagic[4] = {'H', 'D', 'U', 'S'};
inline constexpr std::uint32_t kStoreVersion = 1;

struct QueryHit {
  std::string id;
  double cosine;
  std::string payload;
};

// Hits sorted by cosine descending, then id ascending.
struct QueryResult {
  std::vector<QueryHit> hits;
};

struct StoredRecord {
  std::string id;
  std::string payload;
  std::vector<float> vec;
  double norm;  // derived, not serialized
};

class UtteranceStore {
 public:
  // Two-pass mode accumulates all counts before encoding; streaming mode
  // observes and encodes record by record, so vectors depend on input order.
  // Rejects empty input, duplicate ids, and records that encode to zero.
  static UtteranceStore build(const std::vector<ParsedRecord>& records,
                              const EncodingConfig& cfg);

  static UtteranceStore load(const std::filesystem::path& path);
  static UtteranceStore load(std::istream& in);
  void save(const std::filesystem::path& path) const;
  void save(std::ostream& out) const;

  // Encodes the probe with probe_mask (default: the build mask) using the
  // store's frozen weights and registry, then scans exactly.
  QueryResult query(const UtteranceRecord& probe, FeatureSet probe_mask,
                    std::size_t top_n) const;
  QueryResult query(const UtteranceRecord& probe, std::size_t top_n) const;

  QueryResult query_by_vector(const DenseVector& v, std::size_t top_n) const;

  const EncodingConfig& config() const noexcept { return cfg_; }
  const std::vector<StoredRecord>& records() const noexcept { return records_; }
  const WeightState& weights() const noexcept { return weights_; }
  Registry& registry() const noexcept { return *registry_; }

  // (key, count) sorted by (namespace, name); counts are 0 outside the
  // lexical namespace.
  std::vector<std::pair<FeatureKey, std::uint64_t>> registry_snapshot() const;

  // Families actually observed in the indexed records (vs. the build mask).
  FeatureSet observed_features() const;

 private:
  UtteranceStore(EncodingConfig cfg);

  void append_record(const ParsedRecord& parsed, const DenseVector& encoded);

  EncodingConfig cfg_;
  std::unique_ptr<Registry> registry_;  // mutable item cache behind const queries
  WeightState weights_;
  std::vector<StoredRecord> records_;
};

// One line per hit: id, cosine with six decimals, payload; tab-separated.
std::string format_result(const QueryResult& result);

}  // namespace hdus
