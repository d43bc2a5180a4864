#pragma once
// Value types of the vector space: dimensionality, sparse ternary labels,
// dense state vectors, bipolar binding keys, and permutation maps.
//
// Labels and permutations are immutable once made. Dense vectors are the
// mutable accumulation type; every algebraic operation lives in ops.hpp.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hdus/error.hpp"

namespace hdus {

inline constexpr std::uint32_t kDefaultDim = 2000;
inline constexpr std::uint32_t kDefaultSparsity = 10;

// Cosine at or above this counts as notably similar; calibrate per deployment.
inline constexpr double kDefaultNotabilityThreshold = 0.25;

// Count of coordinates shared by all vectors of one space. At least 2.
class Dimensionality {
 public:
  constexpr Dimensionality() noexcept = default;

  explicit Dimensionality(std::uint32_t d) : d_(d) {
    if (d < 2) throw ConfigError("dimensionality must be at least 2");
  }

  constexpr std::uint32_t value() const noexcept { return d_; }
  friend constexpr bool operator==(Dimensionality, Dimensionality) noexcept = default;

 private:
  std::uint32_t d_ = kDefaultDim;
};

// d-dimensional real vector; the representation of utterances and any
// accumulated state. The zero vector is a valid (initial) state.
class DenseVector {
 public:
  explicit DenseVector(Dimensionality d) : coords_(d.value(), 0.0) {}

  explicit DenseVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw ConfigError("dense vector needs at least 2 coordinates");
    for (double c : coords_) {
      if (!std::isfinite(c)) throw Error("dense vector coordinate is not finite");
    }
  }

  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(coords_.size()); }
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<double> coords() noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  double& operator[](std::size_t i) noexcept { return coords_[i]; }

  bool is_zero() const noexcept {
    for (double c : coords_) {
      if (c != 0.0) return false;
    }
    return true;
  }

  double norm() const noexcept {
    double s = 0.0;
    for (double c : coords_) s += c * c;
    return std::sqrt(s);
  }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<double> coords_;
};

// Sparse ternary index vector: k coordinates at +1, k at -1, rest zero.
// Assigned to an atomic feature once and never updated.
class TernaryLabel {
 public:
  // Position lists must be sorted, disjoint, equal-sized, within [0, d).
  TernaryLabel(Dimensionality d, std::vector<std::uint32_t> plus, std::vector<std::uint32_t> minus)
      : d_(d), plus_(std::move(plus)), minus_(std::move(minus)) {
    validate();
  }

  std::uint32_t dim() const noexcept { return d_.value(); }
  std::uint32_t sparsity() const noexcept { return static_cast<std::uint32_t>(plus_.size()); }
  std::span<const std::uint32_t> plus_positions() const noexcept { return plus_; }
  std::span<const std::uint32_t> minus_positions() const noexcept { return minus_; }

  double norm() const noexcept { return std::sqrt(2.0 * static_cast<double>(plus_.size())); }

  DenseVector to_dense() const {
    DenseVector v(d_);
    for (auto i : plus_) v[i] = 1.0;
    for (auto i : minus_) v[i] = -1.0;
    return v;
  }

  friend bool operator==(const TernaryLabel&, const TernaryLabel&) = default;

 private:
  void validate() const {
    if (plus_.size() != minus_.size() || plus_.empty()) {
      throw SparsityError("label needs equally many +1 and -1 positions, at least one each");
    }
    auto sorted_in_range = [this](const std::vector<std::uint32_t>& xs) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] >= d_.value() || (i > 0 && xs[i] <= xs[i - 1])) return false;
      }
      return true;
    };
    if (!sorted_in_range(plus_) || !sorted_in_range(minus_)) {
      throw Error("label positions must be strictly sorted and within the dimensionality");
    }
    for (std::size_t p = 0, m = 0; p < plus_.size() && m < minus_.size();) {
      if (plus_[p] == minus_[m]) throw Error("label +1 and -1 positions overlap");
      plus_[p] < minus_[m] ? ++p : ++m;
    }
  }

  Dimensionality d_;
  std::vector<std::uint32_t> plus_;
  std::vector<std::uint32_t> minus_;
};

// Dense +1/-1 vector. Its own inverse under coordinate-wise multiplication,
// which is what makes unbinding exact.
class BipolarVector {
 public:
  explicit BipolarVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    if (signs_.size() < 2) throw ConfigError("bipolar vector needs at least 2 coordinates");
    for (std::int8_t s : signs_) {
      if (s != 1 && s != -1) throw Error("bipolar coordinates must be +1 or -1");
    }
  }

  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(signs_.size()); }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  DenseVector to_dense() const {
    DenseVector v(Dimensionality{dim()});
    for (std::size_t i = 0; i < signs_.size(); ++i) v[i] = signs_[i];
    return v;
  }

  friend bool operator==(const BipolarVector&, const BipolarVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

// Invertible coordinate rearrangement. forward()[i] is where coordinate i
// lands; inverse() undoes it. Composable; not itself an element of the space.
class PermutationMap {
 public:
  static PermutationMap identity(Dimensionality d) {
    std::vector<std::uint32_t> fwd(d.value());
    for (std::uint32_t i = 0; i < d.value(); ++i) fwd[i] = i;
    auto inv = fwd;
    return PermutationMap(std::move(fwd), std::move(inv));
  }

  // forward must be a bijection on [0, d); inverse its inverse.
  PermutationMap(std::vector<std::uint32_t> forward, std::vector<std::uint32_t> inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (forward_.size() != inverse_.size() || forward_.size() < 2) {
      throw ConfigError("permutation needs matching forward/inverse maps of size >= 2");
    }
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (forward_[i] >= dim() || inverse_[forward_[i]] != i) {
        throw Error("permutation maps are not inverse bijections");
      }
    }
  }

  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(forward_.size()); }
  std::span<const std::uint32_t> forward() const noexcept { return forward_; }
  std::span<const std::uint32_t> inverse() const noexcept { return inverse_; }

  PermutationMap inverted() const { return PermutationMap(inverse_, forward_); }

  bool is_identity() const noexcept {
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (forward_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

 private:
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace hdus
