#include "hdus/store.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "hdus/ops.hpp"

namespace hdus {

namespace {

// -- little-endian primitives -------------------------------------------------

void put_bytes(std::ostream& out, const void* data, std::size_t n) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
}

void put_u8(std::ostream& out, std::uint8_t v) { put_bytes(out, &v, 1); }

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::uint8_t b[4] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
                             static_cast<std::uint8_t>(v >> 16),
                             static_cast<std::uint8_t>(v >> 24)};
  put_bytes(out, b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_f32(std::ostream& out, float v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }

void put_str(std::ostream& out, const std::string& s) {
  if (s.size() > 0xffffffffull) throw FormatError("string too long for store format");
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  put_bytes(out, s.data(), s.size());
}

void need(std::istream& in, void* data, std::size_t n) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) {
    throw FormatError("store file truncated");
  }
}

std::uint8_t get_u8(std::istream& in) {
  std::uint8_t v;
  need(in, &v, 1);
  return v;
}

std::uint32_t get_u32(std::istream& in) {
  std::uint8_t b[4];
  need(in, b, 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::istream& in) {
  const std::uint64_t lo = get_u32(in);
  const std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

float get_f32(std::istream& in) { return std::bit_cast<float>(get_u32(in)); }

std::string get_str(std::istream& in) {
  const std::uint32_t n = get_u32(in);
  std::string s(n, '\0');
  if (n) need(in, s.data(), n);
  return s;
}

double norm_of(const std::vector<float>& vec) {
  double s = 0.0;
  for (float c : vec) s += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(s);
}

}  // namespace

UtteranceStore::UtteranceStore(EncodingConfig cfg)
    : cfg_(std::move(cfg)),
      registry_(std::make_unique<Registry>(cfg_.seed, cfg_.dim, cfg_.sparsity)),
      weights_(cfg_.lambda) {}

void UtteranceStore::append_record(const ParsedRecord& parsed, const DenseVector& encoded) {
  if (encoded.is_zero()) {
    throw FormatError("record '" + parsed.record.id +
                          "' encodes to the zero vector under the configured feature mask",
                      parsed.line);
  }
  StoredRecord rec;
  rec.id = parsed.record.id;
  rec.payload = parsed.payload;
  rec.vec.resize(encoded.dim());
  for (std::uint32_t i = 0; i < encoded.dim(); ++i) rec.vec[i] = static_cast<float>(encoded[i]);
  rec.norm = norm_of(rec.vec);
  records_.push_back(std::move(rec));
}

UtteranceStore UtteranceStore::build(const std::vector<ParsedRecord>& records,
                                     const EncodingConfig& cfg) {
  cfg.validate();
  if (records.empty()) throw FormatError("no records to index");

  std::unordered_set<std::string> seen;
  for (const ParsedRecord& p : records) {
    if (!seen.insert(p.record.id).second) {
      throw DuplicateIdError("duplicate record id '" + p.record.id + "' (line " +
                             std::to_string(p.line) + ")");
    }
  }

  UtteranceStore store(cfg);
  const Encoder encoder(*store.registry_, cfg);

  auto observe = [&](const UtteranceRecord& rec) {
    for (const std::string& token : rec.tokens) {
      store.weights_.observe({Namespace::lexical, token});
    }
  };

  if (cfg.weight_mode == WeightMode::two_pass) {
    for (const ParsedRecord& p : records) observe(p.record);
    for (const ParsedRecord& p : records) {
      store.append_record(p, encoder.utterance(p.record, store.weights_));
    }
  } else {
    for (const ParsedRecord& p : records) {
      observe(p.record);
      store.append_record(p, encoder.utterance(p.record, store.weights_));
    }
  }
  return store;
}

void UtteranceStore::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  save(out);
  if (!out) throw FormatError("write to '" + path.string() + "' failed");
}

void UtteranceStore::save(std::ostream& out) const {
  put_bytes(out, kStoreMagic, 4);
  put_u32(out, kStoreVersion);
  put_u32(out, cfg_.dim.value());
  put_u32(out, cfg_.sparsity);
  put_u64(out, cfg_.seed);
  put_u32(out, cfg_.lambda);
  put_u8(out, static_cast<std::uint8_t>(cfg_.weight_mode));
  put_u8(out, cfg_.features.bits());
  put_u8(out, 0);  // imported-vectors flag, reserved
  put_u32(out, cfg_.triple_length);

  const auto snapshot = registry_snapshot();
  put_u64(out, snapshot.size());
  for (const auto& [key, count] : snapshot) {
    put_u8(out, static_cast<std::uint8_t>(key.ns));
    put_str(out, key.name);
    put_u64(out, count);
  }

  put_u64(out, records_.size());
  for (const StoredRecord& rec : records_) {
    put_str(out, rec.id);
    put_str(out, rec.payload);
    for (float c : rec.vec) put_f32(out, c);
  }
}

UtteranceStore UtteranceStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open store '" + path.string() + "'");
  return load(in);
}

UtteranceStore UtteranceStore::load(std::istream& in) {
  char magic[4];
  need(in, magic, 4);
  if (std::memcmp(magic, kStoreMagic, 4) != 0) {
    throw FormatError("not a store file (bad magic)");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kStoreVersion) {
    throw FormatError("unsupported store version " + std::to_string(version));
  }

  EncodingConfig cfg;
  try {
    cfg.dim = Dimensionality(get_u32(in));
    cfg.sparsity = get_u32(in);
    cfg.seed = get_u64(in);
    cfg.lambda = get_u32(in);
    const std::uint8_t mode = get_u8(in);
    if (mode > 1) throw ConfigError("bad weight mode");
    cfg.weight_mode = static_cast<WeightMode>(mode);
    cfg.features = FeatureSet::from_bits(get_u8(in));
    if (get_u8(in) != 0) throw ConfigError("imported label vectors are not supported");
    cfg.triple_length = get_u32(in);
    cfg.validate();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(std::string("corrupt store header: ") + e.what());
  }

  UtteranceStore store(cfg);

  const std::uint64_t n_keys = get_u64(in);
  for (std::uint64_t i = 0; i < n_keys; ++i) {
    const std::uint8_t ns_raw = get_u8(in);
    if (ns_raw > static_cast<std::uint8_t>(Namespace::special)) {
      throw FormatError("corrupt store: bad namespace tag");
    }
    const FeatureKey key{static_cast<Namespace>(ns_raw), get_str(in)};
    const std::uint64_t count = get_u64(in);
    // Re-materialize the registry entry; items are recomputed from the seed.
    if (is_label_namespace(key.ns)) {
      if (key.ns == Namespace::special) {
        store.registry_->dense_placeholder(key);
      } else {
        store.registry_->label(key);
      }
    } else {
      store.registry_->permutation(key);
    }
    if (key.ns == Namespace::lexical) store.weights_.observe(key, count);
  }

  const std::uint64_t n_records = get_u64(in);
  std::unordered_set<std::string> seen;
  for (std::uint64_t i = 0; i < n_records; ++i) {
    StoredRecord rec;
    rec.id = get_str(in);
    rec.payload = get_str(in);
    rec.vec.resize(cfg.dim.value());
    for (std::uint32_t c = 0; c < cfg.dim.value(); ++c) {
      rec.vec[c] = get_f32(in);
      if (!std::isfinite(rec.vec[c])) throw FormatError("corrupt store: non-finite coordinate");
    }
    rec.norm = norm_of(rec.vec);
    if (rec.norm == 0.0) throw FormatError("corrupt store: zero vector for record '" + rec.id + "'");
    if (!seen.insert(rec.id).second) {
      throw FormatError("corrupt store: duplicate record id '" + rec.id + "'");
    }
    store.records_.push_back(std::move(rec));
  }
  return store;
}

QueryResult UtteranceStore::query(const UtteranceRecord& probe, std::size_t top_n) const {
  return query(probe, cfg_.features, top_n);
}

QueryResult UtteranceStore::query(const UtteranceRecord& probe, FeatureSet probe_mask,
                                  std::size_t top_n) const {
  if (!probe_mask.subset_of(cfg_.features)) {
    throw ConfigError("probe mask '" + probe_mask.to_string() +
                      "' requests families the store was not built with ('" +
                      cfg_.features.to_string() + "')");
  }
  const Encoder encoder(*registry_, cfg_);
  return query_by_vector(encoder.utterance(probe, weights_, probe_mask), top_n);
}

QueryResult UtteranceStore::query_by_vector(const DenseVector& v, std::size_t top_n) const {
  if (top_n < 1) throw ConfigError("query needs top_n >= 1");
  if (v.dim() != cfg_.dim.value()) {
    throw DimensionMismatch("probe dimension " + std::to_string(v.dim()) +
                            " does not match store dimension " +
                            std::to_string(cfg_.dim.value()));
  }
  const double pn = v.norm();
  if (pn == 0.0) throw ZeroVectorError("probe encodes to the zero vector");

  std::vector<std::size_t> order(records_.size());
  std::vector<double> cos(records_.size());
  for (std::size_t r = 0; r < records_.size(); ++r) {
    order[r] = r;
    double s = 0.0;
    const StoredRecord& rec = records_[r];
    for (std::uint32_t i = 0; i < v.dim(); ++i) s += v[i] * static_cast<double>(rec.vec[i]);
    cos[r] = std::clamp(s / (pn * rec.norm), -1.0, 1.0);
  }

  const std::size_t n = std::min(top_n, order.size());
  std::partial_sort(order.begin(), order.begin() + n, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (cos[a] != cos[b]) return cos[a] > cos[b];
                      return records_[a].id < records_[b].id;
                    });

  QueryResult result;
  result.hits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const StoredRecord& rec = records_[order[i]];
    result.hits.push_back(QueryHit{rec.id, cos[order[i]], rec.payload});
  }
  return result;
}

std::vector<std::pair<FeatureKey, std::uint64_t>> UtteranceStore::registry_snapshot() const {
  // Union of materialized registry items and counted vocabulary keys: a
  // store built without the lexical family still keeps its counts.
  std::map<FeatureKey, std::uint64_t> merged;
  for (FeatureKey& key : registry_->keys()) {
    merged.emplace(std::move(key), 0);
  }
  for (const auto& [key, count] : weights_.sorted_counts()) {
    merged[key] = count;
  }
  return {merged.begin(), merged.end()};
}

FeatureSet UtteranceStore::observed_features() const {
  std::uint8_t bits = 0;
  for (const auto& [key, count] : registry_snapshot()) {
    switch (key.ns) {
      case Namespace::lexical: bits |= static_cast<std::uint8_t>(Feature::lexical); break;
      case Namespace::construction:
        bits |= static_cast<std::uint8_t>(Feature::constructions);
        break;
      case Namespace::role: bits |= static_cast<std::uint8_t>(Feature::roles); break;
      case Namespace::pos_label: bits |= static_cast<std::uint8_t>(Feature::sequence); break;
      case Namespace::special: break;
    }
  }
  return FeatureSet::from_bits(bits);
}

std::string format_result(const QueryResult& result) {
  std::string out;
  char buf[32];
  for (const QueryHit& hit : result.hits) {
    std::snprintf(buf, sizeof buf, "%.6f", hit.cosine);
    out += hit.id;
    out += '\t';
    out += buf;
    out += '\t';
    out += hit.payload;
    out += '\n';
  }
  return out;
}

}  // namespace hdus
