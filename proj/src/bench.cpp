#include "hdus/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_set>

#include "hdus/ops.hpp"
#include "hdus/types.hpp"

namespace hdus {

void BenchConfig::validate() const {
  if (dims.empty()) throw ConfigError("benchmark needs at least one dimensionality");
  std::unordered_set<std::uint32_t> distinct(dims.begin(), dims.end());
  if (distinct.size() != dims.size()) throw ConfigError("benchmark dims must be distinct");
  if (n_features < 1 || distractors < 1 || trials < 1) {
    throw ConfigError("benchmark counts must be at least 1");
  }
  if (sparsity < 1) throw SparsityError("benchmark sparsity must be at least 1");
  for (std::uint32_t d : dims) {
    if (d < 2) throw ConfigError("benchmark dimensionality must be at least 2");
    if (2ull * sparsity > d) {
      throw SparsityError("benchmark sparsity too large for d=" + std::to_string(d));
    }
  }
}

BenchResult run_capacity_bench(const BenchConfig& cfg) {
  cfg.validate();

  BenchResult result;
  result.config = cfg;
  result.reference_cosine = std::sqrt(1.0 / cfg.n_features);
  result.samples.reserve(static_cast<std::size_t>(cfg.dims.size()) * cfg.trials *
                         (cfg.n_features + cfg.distractors));

  for (std::uint32_t d_raw : cfg.dims) {
    const Dimensionality d(d_raw);
    double member_sum = 0.0, member_sq = 0.0;
    double distr_sum = 0.0, distr_sq = 0.0;
    std::uint64_t members_ranked_clean = 0;

    for (std::uint32_t trial = 0; trial < cfg.trials; ++trial) {
      const std::string prefix =
          "bench/d=" + std::to_string(d_raw) + "/t=" + std::to_string(trial) + "/";

      std::vector<TernaryLabel> members;
      members.reserve(cfg.n_features);
      DenseVector state(d);
      for (std::uint32_t m = 0; m < cfg.n_features; ++m) {
        members.push_back(make_label(cfg.seed, prefix + "m" + std::to_string(m), d, cfg.sparsity));
        for (auto i : members.back().plus_positions()) state[i] += 1.0;
        for (auto i : members.back().minus_positions()) state[i] -= 1.0;
      }

      std::vector<double> member_cos(cfg.n_features);
      for (std::uint32_t m = 0; m < cfg.n_features; ++m) {
        member_cos[m] = cosine(members[m], state);
        member_sum += member_cos[m];
        member_sq += member_cos[m] * member_cos[m];
        result.samples.push_back(BenchSample{d_raw, trial, true, member_cos[m]});
      }

      double max_distractor = -2.0;
      for (std::uint32_t x = 0; x < cfg.distractors; ++x) {
        const TernaryLabel distractor =
            make_label(cfg.seed, prefix + "x" + std::to_string(x), d, cfg.sparsity);
        const double c = cosine(distractor, state);
        distr_sum += c;
        distr_sq += c * c;
        max_distractor = std::max(max_distractor, c);
        result.samples.push_back(BenchSample{d_raw, trial, false, c});
      }

      for (double c : member_cos) {
        if (c > max_distractor) ++members_ranked_clean;
      }
    }

    const double n_mem = static_cast<double>(cfg.trials) * cfg.n_features;
    const double n_dis = static_cast<double>(cfg.trials) * cfg.distractors;
    BenchDimSummary s;
    s.d = d_raw;
    s.member_mean = member_sum / n_mem;
    s.member_std = std::sqrt(std::max(0.0, member_sq / n_mem - s.member_mean * s.member_mean));
    s.distractor_mean = distr_sum / n_dis;
    s.distractor_std =
        std::sqrt(std::max(0.0, distr_sq / n_dis - s.distractor_mean * s.distractor_mean));
    s.snr = s.distractor_std > 0.0 ? s.member_mean / s.distractor_std : 0.0;
    s.accuracy = static_cast<double>(members_ranked_clean) / n_mem;
    result.summary.push_back(s);
  }
  return result;
}

void write_capacity_csv(const BenchResult& result, std::ostream& out) {
  out << "d,trial,kind,cosine\n";
  char buf[32];
  for (const BenchSample& s : result.samples) {
    std::snprintf(buf, sizeof buf, "%.9f", s.cosine);
    out << s.d << ',' << s.trial << ',' << (s.member ? "member" : "distractor") << ',' << buf
        << '\n';
  }
}

DistanceConcentration distance_concentration(std::uint32_t bits, std::uint32_t near_radius,
                                             std::uint32_t far_radius) {
  if (bits < 1 || near_radius > bits || far_radius > bits) {
    throw ConfigError("distance concentration radii must lie within [0, bits]");
  }

  // P(X <= r) for X ~ Binomial(bits, 1/2), summed in log space. Radii past
  // the midpoint go through the symmetric complement so the small tail is
  // the one actually summed.
  const auto lower_tail = [bits](std::uint32_t r) {
    const double log_half_n = bits * std::log(2.0);
    const double lg_n = std::lgamma(static_cast<double>(bits) + 1.0);
    double p = 0.0;
    for (std::uint32_t i = 0; i <= r; ++i) {
      const double lg = lg_n - std::lgamma(static_cast<double>(i) + 1.0) -
                        std::lgamma(static_cast<double>(bits - i) + 1.0) - log_half_n;
      p += std::exp(lg);
    }
    return std::min(p, 1.0);
  };
  const auto cdf = [bits, &lower_tail](std::uint32_t r) {
    if (2ull * r > bits && r + 1 <= bits) return 1.0 - lower_tail(bits - r - 1);
    return lower_tail(r);
  };

  DistanceConcentration out;
  out.bits = bits;
  out.near_radius = near_radius;
  out.far_radius = far_radius;
  out.within_near = cdf(near_radius);
  out.within_far = cdf(far_radius);
  return out;
}

}  // namespace hdus
