#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hdus/bench.hpp"
#include "hdus/error.hpp"

using namespace hdus;

namespace {

BenchConfig tiny_config() {
  BenchConfig cfg;
  cfg.dims = {100, 500};
  cfg.n_features = 10;
  cfg.distractors = 50;
  cfg.trials = 10;
  cfg.seed = 5;
  return cfg;
}

std::string csv_of(const BenchResult& result) {
  std::ostringstream out;
  write_capacity_csv(result, out);
  return std::move(out).str();
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("csv row count and schema") {
    const auto result = run_capacity_bench(tiny_config());
    const std::string csv = csv_of(result);

    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "d,trial,kind,cosine");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      std::size_t commas = 0;
      for (char c : line) commas += c == ',';
      CHECK(commas == 3);
      CHECK((line.find("member") != std::string::npos ||
             line.find("distractor") != std::string::npos));
    }
    CHECK(rows == 2u * 10u * (10u + 50u));
  }

  TEST_CASE("same seed gives identical csv bytes, different seed does not") {
    const std::string a = csv_of(run_capacity_bench(tiny_config()));
    const std::string b = csv_of(run_capacity_bench(tiny_config()));
    CHECK(a == b);
    BenchConfig other = tiny_config();
    other.seed = 6;
    CHECK(a != csv_of(run_capacity_bench(other)));
  }

  TEST_CASE("members always sit above distractors on average") {
    const auto result = run_capacity_bench(tiny_config());
    for (const auto& s : result.summary) {
      CHECK(s.member_mean > s.distractor_mean);
      CHECK(s.accuracy >= 0.0);
      CHECK(s.accuracy <= 1.0);
      CHECK(s.distractor_std > 0.0);
    }
    CHECK(result.reference_cosine == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
  }

  TEST_CASE("member mean converges to sqrt(1/N) at d=2000") {
    BenchConfig cfg;
    cfg.dims = {2000};
    cfg.n_features = 20;
    cfg.distractors = 10;
    cfg.trials = 100;
    cfg.seed = 11;
    const auto result = run_capacity_bench(cfg);
    CHECK(std::abs(result.summary[0].member_mean - result.reference_cosine) <= 0.02);
  }

  TEST_CASE("config validation") {
    BenchConfig dup = tiny_config();
    dup.dims = {100, 100};
    CHECK_THROWS_AS(run_capacity_bench(dup), ConfigError);
    BenchConfig none = tiny_config();
    none.trials = 0;
    CHECK_THROWS_AS(run_capacity_bench(none), ConfigError);
    BenchConfig sparse = tiny_config();
    sparse.dims = {16};
    CHECK_THROWS_AS(run_capacity_bench(sparse), SparsityError);
  }

  TEST_CASE("binary distance concentration tails") {
    const auto conc = distance_concentration(2000, 865, 1135);
    CHECK(conc.within_near <= 1e-9);
    CHECK(conc.within_near > 0.0);
    CHECK(conc.within_far >= 1.0 - 1e-9);
    CHECK(conc.within_far <= 1.0);

    const auto mid = distance_concentration(2000, 1000, 2000);
    CHECK(mid.within_near == doctest::Approx(0.5089).epsilon(0.01));  // 0.5 + P(X=1000)/2
    CHECK(mid.within_far == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(distance_concentration(2000, 2001, 1135), ConfigError);
  }
}
