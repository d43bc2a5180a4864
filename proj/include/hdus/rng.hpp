#pragma once
// Deterministic randomness for label and permutation generation.
//
// Every random object in a space is derived from the pair
// (global_seed, seed_material) through a fixed, documented recipe, so the
// same inputs reproduce the same labels and permutations on any machine:
//
//   stream_key = splitmix64(global_seed ^ fnv1a64(seed_material))
//
// The key seeds a xoshiro256** generator (via splitmix64 expansion).
// Bounded draws use rejection sampling, never std::uniform_int_distribution,
// whose output is implementation-defined. Integer-only, so results are
// bit-exact across platforms.

#include <cstdint>
#include <string_view>

namespace hdus {

// FNV-1a, 64-bit, over raw bytes.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// splitmix64 finalizer; also used to expand a 64-bit key into generator state.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t global_seed, std::string_view seed_material) noexcept {
  return splitmix64(global_seed ^ fnv1a64(seed_material));
}

// xoshiro256** keyed by a 64-bit stream key.
class KeyedRng {
 public:
  explicit constexpr KeyedRng(std::uint64_t key) noexcept {
    std::uint64_t sm = key;
    for (auto& word : state_) {
      sm = splitmix64(sm);
      word = sm;
    }
  }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, n); n >= 1.
  constexpr std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // One fair sign.
  constexpr double sign() noexcept { return (next() >> 63) ? 1.0 : -1.0; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4]{};
};

}  // namespace hdus
