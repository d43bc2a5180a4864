#pragma once
// Capacity/noise benchmark: bundle N random labels into one state vector,
// measure each member's cosine against the bundle next to fresh distractor
// labels, across dimensionalities. The member mean tracks sqrt(1/N); the
// distractor spread tracks 1/sqrt(d).
//
// Also the analytic distance-concentration check for binary spaces
// (exact binomial tail, no sampling).

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hdus {

struct BenchConfig {
  std::vector<std::uint32_t> dims{100, 500, 1000, 2000};
  std::uint32_t n_features = 20;
  std::uint32_t distractors = 1000;
  std::uint32_t trials = 100;
  std::uint32_t sparsity = 10;
  std::uint64_t seed = 1;

  void validate() const;
};

struct BenchSample {
  std::uint32_t d;
  std::uint32_t trial;
  bool member;  // true: bundled feature, false: distractor
  double cosine;
};

struct BenchDimSummary {
  std::uint32_t d;
  double member_mean;
  double member_std;
  double distractor_mean;
  double distractor_std;
  double snr;       // member_mean / distractor_std
  double accuracy;  // fraction of members outranking every distractor of their trial
};

struct BenchResult {
  BenchConfig config;
  std::vector<BenchSample> samples;       // trials * (n_features + distractors) rows per d
  std::vector<BenchDimSummary> summary;   // one per d, in config order
  double reference_cosine;                // sqrt(1 / n_features)
};

BenchResult run_capacity_bench(const BenchConfig& cfg);

// CSV: header "d,trial,kind,cosine", then one row per sample, deterministic
// bytes for a given config.
void write_capacity_csv(const BenchResult& result, std::ostream& out);

// Exact fractions of {0,1}^bits within Hamming distance near/far of a fixed
// vector, via the binomial CDF in log space.
struct DistanceConcentration {
  std::uint32_t bits;
  std::uint32_t near_radius;
  std::uint32_t far_radius;
  double within_near;  // P(distance <= near_radius)
  double within_far;   // P(distance <= far_radius)
};

DistanceConcentration distance_concentration(std::uint32_t bits, std::uint32_t near_radius,
                                             std::uint32_t far_radius);

}  // namespace hdus
