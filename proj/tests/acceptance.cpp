// Acceptance suite: runs every headline property of the library end to end
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hdus/bench.hpp"
#include "hdus/encoder.hpp"
#include "hdus/item_memory.hpp"
#include "hdus/ops.hpp"
#include "hdus/store.hpp"
#include "oracle.hpp"
#include "synthetic.hpp"

using namespace hdus;

namespace {

constexpr std::uint64_t kSeed = 1337;
const Dimensionality kD{2000};
constexpr std::uint32_t kK = 10;

struct Failure {
  std::string detail;
};

using Check = std::function<std::string()>;  // returns detail; empty detail = pass

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double max_abs_diff(const DenseVector& a, const DenseVector& b) {
  double m = 0.0;
  for (std::uint32_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_rel_diff(const DenseVector& a, const DenseVector& b) {
  double m = 0.0;
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]) / std::max({std::abs(a[i]), std::abs(b[i]), 1.0}));
  }
  return m;
}

// ---- 1. algebraic identity suite ------------------------------------------

std::string check_algebra() {
  const auto t0 = std::chrono::steady_clock::now();

  const DenseVector a = make_label(kSeed, "alg-a", kD, kK).to_dense();
  const DenseVector b = make_label(kSeed, "alg-b", kD, kK).to_dense();
  const BipolarVector x = make_bipolar(kSeed, "alg-x", kD);
  const DenseVector xd = x.to_dense();
  const PermutationMap p = make_permutation(kSeed, "alg-p", kD);

  expect(max_abs_diff(bind(x, bind(x, a)), a) == 0.0, "bipolar unbind not exact");

  const std::vector<DenseVector> ab{a, b};
  expect(max_abs_diff(bind(xd, bundle(ab)),
                      bundle(std::vector<DenseVector>{bind(xd, a), bind(xd, b)})) == 0.0,
         "bind does not distribute over bundle");
  expect(max_rel_diff(bind(a, bundle(ab)),
                      bundle(std::vector<DenseVector>{bind(a, a), bind(a, b)})) <= 1e-9,
         "dense bind distributivity beyond 1e-9");

  expect(max_abs_diff(permute(p, bundle(ab)),
                      bundle(std::vector<DenseVector>{permute(p, a), permute(p, b)})) == 0.0,
         "permute does not distribute over bundle");
  expect(max_abs_diff(permute(p, bind(a, b)), bind(permute(p, a), permute(p, b))) == 0.0,
         "permute does not distribute over bind");

  const double cos_direct = cosine(a, b);
  const double cos_permuted = cosine(permute(p, a), permute(p, b));
  expect(std::abs(cos_direct - cos_permuted) <= 1e-9, "permutation changes similarity");
  expect(std::abs(permute(p, a).norm() - a.norm()) <= 1e-9 * a.norm(),
         "permutation changes the norm");

  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  expect(dt.count() < 1.0, fmt("runtime %.3f s exceeds 1 s", dt.count()));
  return fmt("coordinate-exact; %.3f s", dt.count());
}

// ---- 2. signal law ----------------------------------------------------------

std::string check_signal_law() {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  for (const std::uint32_t n : {10u, 20u, 100u}) {
    double sum = 0.0;
    std::uint64_t count = 0;
    for (std::uint32_t trial = 0; trial < 1000; ++trial) {
      DenseVector state(kD);
      std::vector<TernaryLabel> members;
      members.reserve(n);
      const std::string prefix = "sig/" + std::to_string(n) + "/" + std::to_string(trial) + "/";
      for (std::uint32_t i = 0; i < n; ++i) {
        members.push_back(make_label(kSeed, prefix + std::to_string(i), kD, kK));
        for (auto pos : members.back().plus_positions()) state[pos] += 1.0;
        for (auto pos : members.back().minus_positions()) state[pos] -= 1.0;
      }
      for (const TernaryLabel& m : members) {
        sum += cosine(m, state);
        ++count;
      }
    }
    const double mean = sum / static_cast<double>(count);
    const double ref = std::sqrt(1.0 / n);
    if (!detail.empty()) detail += ", ";
    detail += fmt("N=%u: %.4f (ref %.4f)", n, mean, ref);
    expect(std::abs(mean - ref) <= 0.02,
           fmt("N=%u member mean %.4f deviates from %.4f by more than 0.02", n, mean, ref));
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  expect(dt.count() < 30.0, fmt("runtime %.1f s exceeds 30 s", dt.count()));
  return detail + fmt("; %.1f s", dt.count());
}

// ---- 3. signal-to-noise ratios ---------------------------------------------

std::string check_snr() {
  BenchConfig cfg;
  cfg.dims = {1000, 2000};
  cfg.n_features = 100;
  cfg.distractors = 1000;
  cfg.trials = 100;
  cfg.sparsity = kK;
  cfg.seed = kSeed;
  const BenchResult result = run_capacity_bench(cfg);

  const double snr_1000 = result.summary[0].snr;
  const double snr_2000 = result.summary[1].snr;
  const std::string detail = fmt("d=1000: %.3f (want [2.5, 4.5]); d=2000: %.3f (want [4.5, 7])",
                                 snr_1000, snr_2000);
  expect(snr_1000 >= 2.5 && snr_1000 <= 4.5, detail);
  expect(snr_2000 >= 4.5 && snr_2000 <= 7.0, detail);
  return detail;
}

// ---- 4. retrieval accuracy trend -------------------------------------------

std::string check_accuracy_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  BenchConfig cfg;
  cfg.dims = {100, 500, 2000};
  cfg.n_features = 20;
  cfg.distractors = 1000;
  cfg.trials = 100;
  cfg.sparsity = kK;
  cfg.seed = kSeed;
  const BenchResult result = run_capacity_bench(cfg);

  const double a100 = result.summary[0].accuracy;
  const double a500 = result.summary[1].accuracy;
  const double a2000 = result.summary[2].accuracy;
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  const std::string detail =
      fmt("accuracy 100/500/2000 = %.4f / %.4f / %.4f; %.1f s", a100, a500, a2000, dt.count());
  expect(a2000 >= 0.999, detail);
  expect(a100 <= a500 && a500 <= a2000, detail + " (not monotone)");
  expect(dt.count() < 60.0, fmt("runtime %.1f s exceeds 60 s", dt.count()));
  return detail;
}

// ---- 5. bound-variable recovery --------------------------------------------

std::string check_bound_recovery() {
  Registry reg(kSeed, kD, kK);
  CleanupMemory memory(kD);
  std::vector<std::string> ids;
  ids.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    const std::string id = "value" + std::to_string(i);
    memory.add(id, reg.label({Namespace::lexical, id}).to_dense());
    ids.push_back(id);
  }

  KeyedRng rng(stream_key(kSeed, "bound-recovery"));
  int recovered = 0;
  const int instances = 1000;
  for (int inst = 0; inst < instances; ++inst) {
    const std::string prefix = "c5/" + std::to_string(inst) + "/";
    const BipolarVector keys[3] = {make_bipolar(kSeed, prefix + "x", kD),
                                   make_bipolar(kSeed, prefix + "y", kD),
                                   make_bipolar(kSeed, prefix + "z", kD)};
    std::size_t picks[3];
    picks[0] = rng.below(1000);
    do picks[1] = rng.below(1000); while (picks[1] == picks[0]);
    do picks[2] = rng.below(1000); while (picks[2] == picks[0] || picks[2] == picks[1]);

    DenseVector sum(kD);
    for (int v = 0; v < 3; ++v) {
      const DenseVector bound =
          bind(keys[v], reg.label({Namespace::lexical, ids[picks[v]]}).to_dense());
      for (std::uint32_t i = 0; i < sum.dim(); ++i) sum[i] += bound[i];
    }

    bool all = true;
    for (int v = 0; v < 3; ++v) {
      const auto hits = memory.nearest(bind(keys[v], sum), 1);
      if (hits.empty() || hits[0].first != ids[picks[v]]) all = false;
    }
    recovered += all;
  }
  const double rate = static_cast<double>(recovered) / instances;
  expect(rate >= 0.99, fmt("recovery rate %.4f below 0.99", rate));
  return fmt("recovery rate %.4f over %d instances", rate, instances);
}

// ---- 6. frequency weight properties ----------------------------------------

std::string check_weight_grid() {
  std::uint64_t checks = 0;
  for (const std::uint32_t lambda : {1u, 2u, 5u, 10u, 20u, 60u, 100u}) {
    for (const std::uint32_t v_background : {1u, 10u, 100u, 1000u, 10000u}) {
      WeightState state(lambda);
      for (std::uint32_t i = 0; i < v_background; ++i) {
        state.observe({Namespace::lexical, "bg" + std::to_string(i)});
      }
      const FeatureKey fresh{Namespace::lexical, "fresh"};
      expect(state.weight(fresh) == 1.0, "weight at f=0 is not exactly 1");

      const FeatureKey target{Namespace::lexical, "target"};
      double previous = state.weight(target);
      bool previous_in_range = true;
      for (std::uint32_t f = 1; f <= 50; ++f) {
        state.observe(target);
        const double v_now = static_cast<double>(state.vocab_size());
        const double exponent = static_cast<double>(lambda) * f / v_now;
        const double w = state.weight(target);
        expect(w > 0.0 && w <= 1.0, fmt("weight %.17g out of (0, 1]", w));
        // Strict decrease and the closed form are checked where exp() is
        // representable; past that the weight sits clamped at the smallest
        // positive double.
        const bool in_range = exponent <= 600.0;
        if (in_range) {
          const double closed = std::exp(-exponent);
          expect(std::abs(w - closed) <= 1e-15, "weight deviates from its closed form");
          if (previous_in_range) {
            expect(w < previous, fmt("weight not strictly decreasing at lambda=%u V=%.0f f=%u",
                                     lambda, v_now, f));
          }
        }
        previous = w;
        previous_in_range = in_range;
        ++checks;
      }
    }
  }
  return fmt("%llu grid points", static_cast<unsigned long long>(checks));
}

// ---- 7. synthetic corpus retrieval -----------------------------------------

struct CorpusFixture {
  synthetic::PlantedCorpus planted;
  UtteranceStore store;
};

const CorpusFixture& corpus_fixture() {
  static CorpusFixture fixture = [] {
    synthetic::PlantedCorpus planted = synthetic::make_planted_corpus(kSeed, 9400, 200, 200);
    EncodingConfig cfg;
    cfg.dim = kD;
    cfg.sparsity = kK;
    cfg.lambda = 60;
    cfg.seed = kSeed;
    UtteranceStore store = UtteranceStore::build(planted.corpus, cfg);
    return CorpusFixture{std::move(planted), std::move(store)};
  }();
  return fixture;
}

std::string check_synthetic_retrieval() {
  const auto& [planted, store] = corpus_fixture();

  int full_hits = 0;
  for (std::size_t i = 0; i < planted.full_probes.size(); ++i) {
    const auto result = store.query(planted.full_probes[i], 1);
    full_hits += !result.hits.empty() && result.hits[0].id == planted.full_target_ids[i];
  }
  const double full_rate = static_cast<double>(full_hits) / planted.full_probes.size();

  int seq_wins = 0;
  for (std::size_t i = 0; i < planted.seq_probes.size(); ++i) {
    const auto result =
        store.query(planted.seq_probes[i], FeatureSet{Feature::sequence}, store.records().size());
    std::size_t twin_rank = result.hits.size(), lex_rank = result.hits.size();
    for (std::size_t r = 0; r < result.hits.size(); ++r) {
      if (result.hits[r].id == planted.twin_ids[i]) twin_rank = r;
      if (result.hits[r].id == planted.lex_ids[i]) lex_rank = r;
    }
    seq_wins += twin_rank < lex_rank;
  }
  const double seq_rate = static_cast<double>(seq_wins) / planted.seq_probes.size();

  KeyedRng rng(stream_key(kSeed, "one-token-probes"));
  int identical = 0;
  const int one_token_probes = 20;
  for (int i = 0; i < one_token_probes; ++i) {
    UtteranceRecord probe;
    probe.id = "probe_one" + std::to_string(i);
    probe.tokens = {synthetic::random_token(rng)};
    probe.pos_labels = {"NN"};
    const auto full = store.query(probe, FeatureSet::all(), 50);
    const auto lex = store.query(probe, FeatureSet{Feature::lexical}, 50);
    bool same = full.hits.size() == lex.hits.size();
    for (std::size_t h = 0; same && h < full.hits.size(); ++h) {
      same = full.hits[h].id == lex.hits[h].id && full.hits[h].cosine == lex.hits[h].cosine;
    }
    identical += same;
  }

  const std::string detail =
      fmt("full-mask top-1 %.3f (need >= 0.95); sequence twin-over-lexical %.3f (need >= 0.90); "
          "%d/%d one-token rankings unchanged",
          full_rate, seq_rate, identical, one_token_probes);
  expect(full_rate >= 0.95, detail);
  expect(seq_rate >= 0.90, detail);
  expect(identical == one_token_probes, detail);
  return detail;
}

// ---- 8. determinism ----------------------------------------------------------

std::string check_determinism() {
  KeyedRng rng(stream_key(kSeed, "determinism-corpus"));
  std::vector<UtteranceRecord> recs;
  for (int i = 0; i < 500; ++i) {
    recs.push_back(synthetic::random_record(rng, "det" + std::to_string(i)));
  }
  const auto corpus = synthetic::to_parsed(recs);

  EncodingConfig cfg;
  cfg.dim = kD;
  cfg.sparsity = kK;
  cfg.lambda = 60;
  cfg.seed = kSeed;

  const auto store_a = UtteranceStore::build(corpus, cfg);
  const auto store_b = UtteranceStore::build(corpus, cfg);

  std::ostringstream bytes_a(std::ios::binary), bytes_b(std::ios::binary);
  store_a.save(bytes_a);
  store_b.save(bytes_b);
  expect(bytes_a.str() == bytes_b.str(), "store files differ between identical builds");

  std::string listing_a, listing_b;
  for (int i = 0; i < 5; ++i) {
    listing_a += format_result(store_a.query(recs[i * 97], 10));
    listing_b += format_result(store_b.query(recs[i * 97], 10));
  }
  expect(listing_a == listing_b, "query listings differ between identical builds");
  return fmt("%zu-byte stores identical; listings identical", bytes_a.str().size());
}

// ---- 9. oracle equivalence ---------------------------------------------------

std::string check_oracle_equivalence() {
  KeyedRng rng(stream_key(kSeed, "oracle-corpus"));
  std::vector<UtteranceRecord> recs;
  for (int i = 0; i < 2000; ++i) {
    recs.push_back(synthetic::random_record(rng, "or" + std::to_string(i)));
  }
  const auto corpus = synthetic::to_parsed(recs);

  EncodingConfig cfg;
  cfg.dim = kD;
  cfg.sparsity = kK;
  cfg.lambda = 60;
  cfg.seed = kSeed;
  const auto store = UtteranceStore::build(corpus, cfg);

  Registry reg(cfg.seed, cfg.dim, cfg.sparsity);
  const Encoder encoder(reg, cfg);
  WeightState state(cfg.lambda);
  for (const auto& p : corpus) {
    for (const auto& token : p.record.tokens) state.observe({Namespace::lexical, token});
  }

  std::vector<std::pair<std::string, std::vector<double>>> entries;
  entries.reserve(store.records().size());
  for (const auto& rec : store.records()) {
    entries.emplace_back(rec.id, std::vector<double>(rec.vec.begin(), rec.vec.end()));
  }

  for (int q = 0; q < 100; ++q) {
    const UtteranceRecord probe = synthetic::random_record(rng, "probe" + std::to_string(q));
    const auto got = store.query(probe, 25);

    const DenseVector pv = encoder.utterance(probe, state);
    const auto expected = oracle::nearest(
        entries, std::vector<double>(pv.coords().begin(), pv.coords().end()), 25);

    expect(got.hits.size() == expected.size(), "result sizes differ from the naive scan");
    for (std::size_t i = 0; i < expected.size(); ++i) {
      expect(got.hits[i].id == expected[i].first,
             fmt("probe %d rank %zu: id '%s' vs oracle '%s'", q, i, got.hits[i].id.c_str(),
                 expected[i].first.c_str()));
      expect(got.hits[i].cosine == expected[i].second,
             fmt("probe %d rank %zu: cosine %.17g vs oracle %.17g", q, i, got.hits[i].cosine,
                 expected[i].second));
    }
  }
  return "100 probes, exact order and values";
}

// ---- 10. analytic distance concentration ------------------------------------

std::string check_distance_concentration() {
  const auto conc = distance_concentration(2000, 865, 1135);
  const std::string detail = fmt("within 865 bits: %.3e (need <= 1e-9); within 1135 bits: 1 - %.3e "
                                 "(need >= 1 - 1e-9)",
                                 conc.within_near, 1.0 - conc.within_far);
  expect(conc.within_near <= 1e-9, detail);
  expect(conc.within_far >= 1.0 - 1e-9, detail);
  return detail;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    Check check;
  };
  const std::vector<Criterion> criteria{
      {1, "algebraic identity suite", check_algebra},
      {2, "signal law sqrt(1/N)", check_signal_law},
      {3, "signal-to-noise ratios", check_snr},
      {4, "retrieval accuracy trend", check_accuracy_trend},
      {5, "bound-variable recovery", check_bound_recovery},
      {6, "frequency weight properties", check_weight_grid},
      {7, "synthetic corpus retrieval", check_synthetic_retrieval},
      {8, "index/query determinism", check_determinism},
      {9, "query oracle equivalence", check_oracle_equivalence},
      {10, "distance concentration tails", check_distance_concentration},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      detail = criterion.check();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.detail;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("unexpected error: ") + e.what();
      ++failures;
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::printf("[%2d] %s  %-32s (%6.2f s)  %s\n", criterion.number, verdict.c_str(),
                criterion.name, dt.count(), detail.c_str());
    std::fflush(stdout);
  }

  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
