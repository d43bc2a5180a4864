#include "hdus/ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hdus/rng.hpp"

namespace hdus {

namespace {

void check_same_dim(std::uint32_t a, std::uint32_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

TernaryLabel make_label(std::uint64_t global_seed, std::string_view seed_material,
                        Dimensionality d, std::uint32_t k) {
  if (seed_material.empty()) throw ConfigError("label seed material must be non-empty");
  if (k < 1) throw SparsityError("label sparsity must be at least 1");
  if (2ull * k > d.value()) {
    throw SparsityError("label sparsity too large: 2*" + std::to_string(k) + " > " +
                        std::to_string(d.value()));
  }

  KeyedRng rng(stream_key(global_seed, seed_material));

  // Partial Fisher-Yates: the first 2k entries end up a uniform sample
  // of distinct positions, in draw order.
  std::vector<std::uint32_t> idx(d.value());
  std::iota(idx.begin(), idx.end(), 0u);
  const std::uint32_t n = 2 * k;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto j = i + static_cast<std::uint32_t>(rng.below(d.value() - i));
    std::swap(idx[i], idx[j]);
  }

  std::vector<std::uint32_t> plus(idx.begin(), idx.begin() + k);
  std::vector<std::uint32_t> minus(idx.begin() + k, idx.begin() + n);
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return TernaryLabel(d, std::move(plus), std::move(minus));
}

PermutationMap make_permutation(std::uint64_t global_seed, std::string_view seed_material,
                                Dimensionality d) {
  if (seed_material.empty()) throw ConfigError("permutation seed material must be non-empty");

  KeyedRng rng(stream_key(global_seed, seed_material));
  std::vector<std::uint32_t> fwd(d.value());
  std::iota(fwd.begin(), fwd.end(), 0u);
  for (std::uint32_t i = d.value() - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(rng.below(i + 1ull));
    std::swap(fwd[i], fwd[j]);
  }

  std::vector<std::uint32_t> inv(d.value());
  for (std::uint32_t i = 0; i < d.value(); ++i) inv[fwd[i]] = i;
  return PermutationMap(std::move(fwd), std::move(inv));
}

BipolarVector make_bipolar(std::uint64_t global_seed, std::string_view seed_material,
                           Dimensionality d) {
  if (seed_material.empty()) throw ConfigError("bipolar seed material must be non-empty");

  KeyedRng rng(stream_key(global_seed, seed_material));
  std::vector<std::int8_t> signs(d.value());
  for (auto& s : signs) s = (rng.next() >> 63) ? std::int8_t{1} : std::int8_t{-1};
  return BipolarVector(std::move(signs));
}

PermutationMap compose(const PermutationMap& p, const PermutationMap& q) {
  check_same_dim(p.dim(), q.dim());
  const std::uint32_t d = p.dim();
  std::vector<std::uint32_t> fwd(d), inv(d);
  for (std::uint32_t i = 0; i < d; ++i) fwd[i] = p.forward()[q.forward()[i]];
  for (std::uint32_t i = 0; i < d; ++i) inv[fwd[i]] = i;
  return PermutationMap(std::move(fwd), std::move(inv));
}

double dot(const DenseVector& a, const DenseVector& b) {
  check_same_dim(a.dim(), b.dim());
  double s = 0.0;
  for (std::uint32_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const TernaryLabel& a, const DenseVector& b) {
  check_same_dim(a.dim(), b.dim());
  double s = 0.0;
  for (auto i : a.plus_positions()) s += b[i];
  for (auto i : a.minus_positions()) s -= b[i];
  return s;
}

DenseVector bundle(std::span<const DenseVector> vs, std::span<const double> ws) {
  if (vs.empty()) throw Error("bundle of an empty list");
  if (vs.size() != ws.size()) {
    throw Error("bundle needs one weight per vector: " + std::to_string(vs.size()) + " vs " +
                std::to_string(ws.size()));
  }
  for (double w : ws) {
    if (!std::isfinite(w)) throw Error("bundle weight is not finite");
  }

  DenseVector out(Dimensionality{vs[0].dim()});
  for (std::size_t v = 0; v < vs.size(); ++v) {
    check_same_dim(vs[0].dim(), vs[v].dim());
    const double w = ws[v];
    for (std::uint32_t i = 0; i < out.dim(); ++i) out[i] += w * vs[v][i];
  }
  return out;
}

DenseVector bundle(std::span<const DenseVector> vs) {
  const std::vector<double> ones(vs.size(), 1.0);
  return bundle(vs, ones);
}

DenseVector bind(const DenseVector& a, const DenseVector& b) {
  check_same_dim(a.dim(), b.dim());
  DenseVector out(Dimensionality{a.dim()});
  for (std::uint32_t i = 0; i < a.dim(); ++i) out[i] = a[i] * b[i];
  return out;
}

DenseVector bind(const BipolarVector& key, const DenseVector& v) {
  check_same_dim(key.dim(), v.dim());
  DenseVector out(Dimensionality{v.dim()});
  for (std::uint32_t i = 0; i < v.dim(); ++i) out[i] = key.signs()[i] * v[i];
  return out;
}

DenseVector permute(const PermutationMap& p, const DenseVector& v) {
  check_same_dim(p.dim(), v.dim());
  DenseVector out(Dimensionality{v.dim()});
  for (std::uint32_t i = 0; i < v.dim(); ++i) out[p.forward()[i]] = v[i];
  return out;
}

TernaryLabel permute(const PermutationMap& p, const TernaryLabel& label) {
  check_same_dim(p.dim(), label.dim());
  std::vector<std::uint32_t> plus, minus;
  plus.reserve(label.plus_positions().size());
  minus.reserve(label.minus_positions().size());
  for (auto i : label.plus_positions()) plus.push_back(p.forward()[i]);
  for (auto i : label.minus_positions()) minus.push_back(p.forward()[i]);
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  return TernaryLabel(Dimensionality{label.dim()}, std::move(plus), std::move(minus));
}

double cosine(const DenseVector& a, const DenseVector& b) {
  check_same_dim(a.dim(), b.dim());
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw ZeroVectorError("cosine with a zero vector is undefined");
  const double c = dot(a, b) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

double cosine(const TernaryLabel& a, const DenseVector& b) {
  const double nb = b.norm();
  if (nb == 0.0) throw ZeroVectorError("cosine with a zero vector is undefined");
  const double c = dot(a, b) / (a.norm() * nb);
  return std::clamp(c, -1.0, 1.0);
}

DenseVector encode_pair(const DenseVector& a, const DenseVector& b,
                        const PermutationMap& p_car, const PermutationMap& p_cdr) {
  if (p_car == p_cdr) throw ConfigError("pair encoding needs two distinct permutations");
  DenseVector out = permute(p_car, a);
  const DenseVector right = permute(p_cdr, b);
  check_same_dim(out.dim(), right.dim());
  for (std::uint32_t i = 0; i < out.dim(); ++i) out[i] += right[i];
  return out;
}

DenseVector encode_positional_sequence(std::span<const DenseVector> vs,
                                       const PermutationMap& p_precede) {
  if (vs.empty()) throw Error("positional encoding of an empty sequence");
  // Fold using distributivity of permutation over the product: after step i
  // the accumulator holds element j permuted i-j times, all multiplied.
  DenseVector acc = vs[0];
  for (std::size_t i = 1; i < vs.size(); ++i) {
    acc = bind(permute(p_precede, acc), vs[i]);
  }
  return acc;
}

}  // namespace hdus
