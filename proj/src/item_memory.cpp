#include "hdus/item_memory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "hdus/ops.hpp"
#include "hdus/rng.hpp"

namespace hdus {

namespace {

constexpr char kMaterialSep = '\x1f';

std::string material_for(const FeatureKey& key) {
  std::string m{to_string(key.ns)};
  m += kMaterialSep;
  m += key.name;
  return m;
}

// Generic lazy-resolve against one of the registry maps: shared lock for the
// lookup, value built outside any lock, unique lock to publish. Losing an
// insert race just discards the duplicate value.
template <typename Map, typename Make>
const typename Map::mapped_type::element_type& resolve(std::shared_mutex& mutex, Map& map,
                                                       const FeatureKey& key, Make make) {
  {
    std::shared_lock lock(mutex);
    if (auto it = map.find(key); it != map.end()) return *it->second;
  }
  auto value = std::make_unique<typename Map::mapped_type::element_type>(make());
  std::unique_lock lock(mutex);
  return *map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

std::string_view to_string(Namespace ns) {
  switch (ns) {
    case Namespace::lexical: return "lexical";
    case Namespace::construction: return "construction";
    case Namespace::role: return "role";
    case Namespace::pos_label: return "pos_label";
    case Namespace::special: return "special";
  }
  throw Error("unknown namespace value");
}

Namespace parse_namespace(std::string_view name) {
  if (name == "lexical") return Namespace::lexical;
  if (name == "construction") return Namespace::construction;
  if (name == "role") return Namespace::role;
  if (name == "pos_label") return Namespace::pos_label;
  if (name == "special") return Namespace::special;
  throw NamespaceError("unknown namespace: " + std::string(name));
}

Registry::Registry(std::uint64_t global_seed, Dimensionality d, std::uint32_t sparsity)
    : seed_(global_seed), d_(d), sparsity_(sparsity) {
  if (sparsity < 1 || 2ull * sparsity > d.value()) {
    throw SparsityError("registry sparsity must satisfy 1 <= k and 2k <= d");
  }
}

const TernaryLabel& Registry::label(const FeatureKey& key) {
  if (!is_label_namespace(key.ns)) {
    throw NamespaceError("namespace '" + std::string(to_string(key.ns)) +
                         "' does not carry labels (key '" + key.name + "')");
  }
  return resolve(mutex_, labels_, key,
                 [&] { return make_label(seed_, material_for(key), d_, sparsity_); });
}

const PermutationMap& Registry::permutation(const FeatureKey& key) {
  if (!is_permutation_namespace(key.ns)) {
    throw NamespaceError("namespace '" + std::string(to_string(key.ns)) +
                         "' does not carry permutations (key '" + key.name + "')");
  }
  return resolve(mutex_, permutations_, key,
                 [&] { return make_permutation(seed_, material_for(key), d_); });
}

const DenseVector& Registry::dense_placeholder(const FeatureKey& key) {
  if (key.ns != Namespace::special) {
    throw NamespaceError("dense placeholders live in the special namespace (key '" + key.name +
                         "')");
  }
  return resolve(mutex_, placeholders_, key, [&] {
    const BipolarVector signs = make_bipolar(seed_, material_for(key), d_);
    const double scale = std::sqrt(2.0 * sparsity_ / static_cast<double>(d_.value()));
    DenseVector v(d_);
    for (std::uint32_t i = 0; i < d_.value(); ++i) v[i] = signs.signs()[i] * scale;
    return v;
  });
}

std::size_t Registry::size() const {
  std::shared_lock lock(mutex_);
  return labels_.size() + permutations_.size() + placeholders_.size();
}

std::vector<FeatureKey> Registry::keys() const {
  std::vector<FeatureKey> out;
  {
    std::shared_lock lock(mutex_);
    out.reserve(labels_.size() + permutations_.size() + placeholders_.size());
    for (const auto& [key, value] : labels_) out.push_back(key);
    for (const auto& [key, value] : permutations_) out.push_back(key);
    for (const auto& [key, value] : placeholders_) out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CleanupMemory::add(std::string id, DenseVector v) {
  if (v.dim() != d_.value()) {
    throw DimensionMismatch("cleanup entry dimension " + std::to_string(v.dim()) +
                            " does not match memory dimension " + std::to_string(d_.value()));
  }
  if (v.is_zero()) throw ZeroVectorError("cleanup entry '" + id + "' is the zero vector");
  for (const Entry& e : entries_) {
    if (e.id == id) throw DuplicateIdError("duplicate cleanup identifier '" + id + "'");
  }
  const double n = v.norm();
  entries_.push_back(Entry{std::move(id), std::move(v), n});
}

std::vector<std::pair<std::string, double>> CleanupMemory::nearest(const DenseVector& probe,
                                                                   std::size_t top_n) const {
  if (top_n < 1) throw ConfigError("nearest() needs top_n >= 1");
  if (entries_.empty()) return {};
  if (probe.dim() != d_.value()) {
    throw DimensionMismatch("probe dimension " + std::to_string(probe.dim()) +
                            " does not match memory dimension " + std::to_string(d_.value()));
  }
  const double pn = probe.norm();
  if (pn == 0.0) throw ZeroVectorError("cleanup probe is the zero vector");

  std::vector<std::pair<std::string, double>> scored;
  scored.reserve(entries_.size());
  for (const Entry& e : entries_) {
    double s = 0.0;
    for (std::uint32_t i = 0; i < probe.dim(); ++i) s += probe[i] * e.vec[i];
    scored.emplace_back(e.id, s / (pn * e.norm));
  }

  const std::size_t n = std::min(top_n, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + n, scored.end(),
                    [](const auto& a, const auto& b) {
                      if (a.second != b.second) return a.second > b.second;
                      return a.first < b.first;
                    });
  scored.resize(n);
  return scored;
}

}  // namespace hdus
