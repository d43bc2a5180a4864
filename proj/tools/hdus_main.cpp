// hdus command line: index a corpus of annotated utterances into a vector
// store, query it by probe utterances or raw feature vectors, inspect a
// store, and run the capacity/noise benchmark.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 internal error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdus/bench.hpp"
#include "hdus/jsonl.hpp"
#include "hdus/ops.hpp"
#include "hdus/store.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct IndexArgs {
  std::string input;
  std::string store;
  std::uint64_t seed = 0;
  std::uint32_t dim = hdus::kDefaultDim;
  std::uint32_t sparsity = hdus::kDefaultSparsity;
  std::uint32_t lambda = 60;
  std::uint32_t triple_length = 3;
  std::string weight_mode = "two-pass";
  std::string features = hdus::FeatureSet::all().to_string();
};

int cmd_index(const IndexArgs& args) {
  hdus::EncodingConfig cfg;
  cfg.dim = hdus::Dimensionality(args.dim);
  cfg.sparsity = args.sparsity;
  cfg.lambda = args.lambda;
  cfg.seed = args.seed;
  cfg.triple_length = args.triple_length;
  cfg.weight_mode = hdus::parse_weight_mode(args.weight_mode);
  cfg.features = hdus::FeatureSet::parse(args.features);

  std::ifstream in(args.input);
  if (!in) throw hdus::FormatError("cannot open input '" + args.input + "'");

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = hdus::read_records(in);
  const auto store = hdus::UtteranceStore::build(records, cfg);
  store.save(args.store);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

  std::cout << "records: " << store.records().size() << "\n"
            << "vocabulary: " << store.weights().vocab_size() << "\n"
            << "build time: ";
  std::printf("%.3f s\n", elapsed.count());
  std::cout << "store: " << args.store << "\n";
  return kExitOk;
}

struct QueryArgs {
  std::string store;
  std::string probe_file;
  std::string tokens;
  std::string mask;
  std::size_t top = 10;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> dim;
};

hdus::UtteranceRecord probe_from_args(const QueryArgs& args) {
  if (!args.probe_file.empty()) {
    std::ifstream in(args.probe_file);
    if (!in) throw hdus::FormatError("cannot open probe file '" + args.probe_file + "'");
    const auto records = hdus::read_records(in);
    if (records.size() != 1) {
      throw hdus::FormatError("probe file must contain exactly one record, got " +
                              std::to_string(records.size()));
    }
    return records.front().record;
  }
  hdus::UtteranceRecord rec;
  rec.id = "probe";
  std::istringstream split(args.tokens);
  std::string token;
  while (split >> token) rec.tokens.push_back(token);
  rec.validate();
  return rec;
}

int cmd_query(const QueryArgs& args) {
  const auto store = hdus::UtteranceStore::load(args.store);
  if (args.seed && *args.seed != store.config().seed) {
    throw hdus::ConfigError("--seed does not match the store's seed; labels would not align");
  }
  if (args.dim && *args.dim != store.config().dim.value()) {
    throw hdus::ConfigError("--dim does not match the store's dimensionality");
  }

  const hdus::FeatureSet mask =
      args.mask.empty() ? store.config().features : hdus::FeatureSet::parse(args.mask);
  const auto result = store.query(probe_from_args(args), mask, args.top);
  std::cout << hdus::format_result(result);
  return kExitOk;
}

int cmd_inspect(const std::string& store_path, std::size_t top_keys) {
  const auto store = hdus::UtteranceStore::load(store_path);
  const auto& cfg = store.config();
  std::cout << "dimensionality: " << cfg.dim.value() << "\n"
            << "sparsity: " << cfg.sparsity << "\n"
            << "seed: " << cfg.seed << "\n"
            << "lambda: " << cfg.lambda << "\n"
            << "weight mode: " << hdus::to_string(cfg.weight_mode) << "\n"
            << "triple length: " << cfg.triple_length << "\n"
            << "features (built): " << cfg.features.to_string() << "\n";
  const hdus::FeatureSet observed = store.observed_features();
  std::cout << "features (observed): "
            << (observed.empty() ? std::string("none") : observed.to_string()) << "\n"
            << "records: " << store.records().size() << "\n"
            << "vocabulary: " << store.weights().vocab_size() << "\n"
            << "registry entries: " << store.registry_snapshot().size() << "\n";

  auto counts = store.weights().sorted_counts();
  std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::cout << "top keys (count, weight):\n";
  for (std::size_t i = 0; i < counts.size() && i < top_keys; ++i) {
    std::printf("  %-24s %8llu  %.6f\n", counts[i].first.name.c_str(),
                static_cast<unsigned long long>(counts[i].second),
                store.weights().weight(counts[i].first));
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::uint32_t> dims{100, 500, 1000, 2000};
  std::uint32_t n_features = 20;
  std::uint32_t distractors = 1000;
  std::uint32_t trials = 100;
  std::uint32_t sparsity = hdus::kDefaultSparsity;
  std::uint64_t seed = 1;
  std::string csv;
};

int cmd_bench_capacity(const BenchArgs& args) {
  hdus::BenchConfig cfg;
  cfg.dims = args.dims;
  cfg.n_features = args.n_features;
  cfg.distractors = args.distractors;
  cfg.trials = args.trials;
  cfg.sparsity = args.sparsity;
  cfg.seed = args.seed;

  const auto result = hdus::run_capacity_bench(cfg);

  if (!args.csv.empty()) {
    std::ofstream out(args.csv, std::ios::binary | std::ios::trunc);
    if (!out) throw hdus::FormatError("cannot open '" + args.csv + "' for writing");
    hdus::write_capacity_csv(result, out);
    if (!out) throw hdus::FormatError("write to '" + args.csv + "' failed");
  }

  std::printf("reference member cosine sqrt(1/%u) = %.4f\n", cfg.n_features,
              result.reference_cosine);
  std::printf("%6s %12s %12s %12s %12s %8s %9s\n", "d", "member_mean", "member_std", "distr_mean",
              "distr_std", "snr", "accuracy");
  for (const auto& s : result.summary) {
    std::printf("%6u %12.4f %12.4f %12.4f %12.4f %8.2f %9.4f\n", s.d, s.member_mean, s.member_std,
                s.distractor_mean, s.distractor_std, s.snr, s.accuracy);
  }

  const auto conc = hdus::distance_concentration(2000, 865, 1135);
  std::printf(
      "distance concentration (2000-bit space): within %u bits %.3e, within %u bits 1 - %.3e\n",
      conc.near_radius, conc.within_near, conc.far_radius, 1.0 - conc.within_far);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperdimensional utterance spaces"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "encode a corpus into a store");
  index->add_option("--input", index_args.input, "utterance records, one JSON object per line")
      ->required();
  index->add_option("--store", index_args.store, "output store path")->required();
  index->add_option("--seed", index_args.seed, "global seed (stored in the header)")->required();
  index->add_option("--dim", index_args.dim, "dimensionality")->check(CLI::Range(2u, 1000000u));
  index->add_option("--sparsity", index_args.sparsity, "label sparsity k")
      ->check(CLI::PositiveNumber);
  index->add_option("--lambda", index_args.lambda, "frequency weight aggressiveness")
      ->check(CLI::PositiveNumber);
  index->add_option("--triple-length", index_args.triple_length, "pos window length")
      ->check(CLI::PositiveNumber);
  index->add_option("--weight-mode", index_args.weight_mode, "two-pass | streaming");
  index->add_option("--features", index_args.features,
                    "families to encode (comma-joined: lexical,constructions,roles,sequence)");

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "rank stored utterances against a probe");
  query->add_option("--store", query_args.store, "store path")->required();
  query->add_option("--probe-file", query_args.probe_file, "file with exactly one record");
  query->add_option("--tokens", query_args.tokens, "inline probe tokens");
  query->add_option("--mask", query_args.mask, "feature families to encode the probe with");
  query->add_option("--top", query_args.top, "number of hits")->check(CLI::PositiveNumber);
  query->add_option("--seed", query_args.seed, "expected store seed (validated)");
  query->add_option("--dim", query_args.dim, "expected store dimensionality (validated)");

  std::string inspect_store;
  std::size_t inspect_top_keys = 10;
  auto* inspect = app.add_subcommand("inspect", "print a store's header and statistics");
  inspect->add_option("--store", inspect_store, "store path")->required();
  inspect->add_option("--top-keys", inspect_top_keys, "how many keys to list");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench-capacity", "bundle-capacity benchmark with CSV output");
  bench->add_option("--dims", bench_args.dims, "dimensionalities to sweep");
  bench->add_option("--features", bench_args.n_features, "bundled features per trial")
      ->check(CLI::PositiveNumber);
  bench->add_option("--distractors", bench_args.distractors, "distractor labels per trial")
      ->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_args.trials, "trials per dimensionality")
      ->check(CLI::PositiveNumber);
  bench->add_option("--sparsity", bench_args.sparsity, "label sparsity k")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "benchmark seed");
  bench->add_option("--csv", bench_args.csv, "per-sample CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (index->parsed()) return cmd_index(index_args);
    if (query->parsed()) {
      if (query_args.probe_file.empty() == query_args.tokens.empty()) {
        std::cerr << "query needs exactly one of --probe-file or --tokens\n";
        return kExitUsage;
      }
      return cmd_query(query_args);
    }
    if (inspect->parsed()) return cmd_inspect(inspect_store, inspect_top_keys);
    if (bench->parsed()) return cmd_bench_capacity(bench_args);
    return kExitUsage;
  } catch (const hdus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
