#pragma once
// The vector algebra: generation of random labels/permutations, bundling
// (weighted addition), binding (Hadamard product), permutation, cosine, and
// the two structure encoders built from them.
//
// All operations are pure functions over immutable inputs. Mixed-dimension
// operands raise DimensionMismatch.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hdus/types.hpp"

namespace hdus {

// Deterministic sparse ternary label keyed by (global_seed, seed_material):
// 2k distinct positions drawn uniformly, first k at +1, next k at -1.
// Requires k >= 1 and 2k <= d.
TernaryLabel make_label(std::uint64_t global_seed, std::string_view seed_material,
                        Dimensionality d, std::uint32_t k);

// Deterministic uniform random permutation keyed by (global_seed, seed_material).
PermutationMap make_permutation(std::uint64_t global_seed, std::string_view seed_material,
                                Dimensionality d);

// Deterministic dense +1/-1 vector keyed the same way.
BipolarVector make_bipolar(std::uint64_t global_seed, std::string_view seed_material,
                           Dimensionality d);

// compose(p, q) applies q first, then p: apply(compose(p,q), v) == apply(p, apply(q, v)).
PermutationMap compose(const PermutationMap& p, const PermutationMap& q);

double dot(const DenseVector& a, const DenseVector& b);
double dot(const TernaryLabel& a, const DenseVector& b);

// Coordinate-wise weighted sum. Commutative and associative in its inputs
// up to floating-point reassociation.
DenseVector bundle(std::span<const DenseVector> vs, std::span<const double> ws);
DenseVector bundle(std::span<const DenseVector> vs);  // all weights 1

// Coordinate-wise (Hadamard) product. Dissimilar to both operands;
// distributes over bundle; exactly invertible when one operand is bipolar.
DenseVector bind(const DenseVector& a, const DenseVector& b);
DenseVector bind(const BipolarVector& key, const DenseVector& v);

// out[p.forward()[i]] = v[i]. Norm- and similarity-preserving; distributes
// over both bundle and bind.
DenseVector permute(const PermutationMap& p, const DenseVector& v);
TernaryLabel permute(const PermutationMap& p, const TernaryLabel& label);

// dot/(|a||b|), in [-1, 1]. Zero operands raise ZeroVectorError: the angle
// of a never-updated vector is undefined.
double cosine(const DenseVector& a, const DenseVector& b);
double cosine(const TernaryLabel& a, const DenseVector& b);

// Ordered pair as permute(p_car, a) + permute(p_cdr, b). Nests: encoding
// pairs of pairs expands into sums of compose-permuted leaves.
DenseVector encode_pair(const DenseVector& a, const DenseVector& b,
                        const PermutationMap& p_car, const PermutationMap& p_cdr);

// Sequence as a bind chain with positional permutation: element i is
// permuted n-1-i times by p_precede, the last element not at all,
// and the results are multiplied together.
DenseVector encode_positional_sequence(std::span<const DenseVector> vs,
                                       const PermutationMap& p_precede);

}  // namespace hdus
