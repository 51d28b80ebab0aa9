#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ewm/normalize.hpp"
#include "ewm/scoring.hpp"
#include "support.hpp"

using namespace ewm;
using Vec = std::vector<double>;
using Idx = std::vector<std::size_t>;

namespace {

Schema schema_of(std::size_t m) {
  std::vector<IndicatorSpec> specs;
  for (std::size_t j = 0; j < m; ++j) {
    specs.push_back({"c" + std::to_string(j), Category::Operation, Direction::Positive, ""});
  }
  return Schema(std::move(specs));
}

}  // namespace

TEST_CASE("composite_scores examples") {
  const NormalizedMatrix s(2, {1.0, 0.0, 0.0, 1.0}, schema_of(2));
  const auto scores = composite_scores(s, WeightVector({0.5, 0.5}), 100.0);
  CHECK(scores == Vec{50.0, 50.0});

  // A row of ones reaches the scale exactly, even when the weights do not
  // sum to exactly 1 in floating point.
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 17;
    Vec h(m);
    for (auto& v : h) v = unit(rng);
    const auto w = compute_weights(EntropyVector(h));
    Vec cells(2 * m, 1.0);
    std::fill(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(m), 0.0);
    const NormalizedMatrix mat(2, cells, schema_of(m));
    const auto sc = composite_scores(mat, w, 100.0);
    CHECK(sc[0] == 0.0);
    CHECK(sc[1] == 100.0);
  }
}

TEST_CASE("composite_scores errors") {
  const NormalizedMatrix s(2, {1.0, 0.0, 0.0, 1.0}, schema_of(2));
  CHECK_THROWS_AS(composite_scores(s, WeightVector({1.0})), Error);
  CHECK_THROWS_AS(composite_scores(s, WeightVector({0.5, 0.5}), 0.0), Error);
}

TEST_CASE("rank") {
  CHECK(rank(Vec{10, 30, 20}) == Idx{1, 2, 0});
  CHECK(rank(Vec{5, 5}) == Idx{0, 1});
  CHECK(rank(Vec{1, 3, 3, 2, 3}) == Idx{1, 2, 4, 3, 0});
  CHECK(rank(Vec{}).empty());

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coarse(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Vec scores(1 + trial);
    for (auto& v : scores) v = coarse(rng);
    const auto order = rank(scores);
    Idx sorted = order;
    std::sort(sorted.begin(), sorted.end());
    Idx identity(scores.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    CHECK(sorted == identity);
    for (std::size_t k = 1; k < order.size(); ++k) {
      CHECK(scores[order[k - 1]] >= scores[order[k]]);
      if (scores[order[k - 1]] == scores[order[k]]) CHECK(order[k - 1] < order[k]);
    }
  }
}

TEST_CASE("describe") {
  const auto s = describe(Vec{0, 50, 100});
  CHECK(s.mean == 50.0);
  CHECK(s.median == 50.0);
  CHECK(s.smallest == 0.0);
  CHECK(s.largest == 100.0);
  CHECK(s.obs == 3);
  CHECK(s.std_dev == 50.0);
  CHECK_FALSE(s.skewness);
  CHECK_FALSE(s.kurtosis);

  const auto c = describe(Vec{7, 7, 7, 7, 7});
  CHECK(c.std_dev == 0.0);
  CHECK_FALSE(c.skewness);
  CHECK_FALSE(c.kurtosis);

  // scipy.stats.skew / kurtosis with bias=False, numpy std(ddof=1), median.
  const auto d = describe(Vec{3, 1, 4, 1, 5, 9, 2, 6});
  CHECK(d.median == 3.5);
  CHECK(d.std_dev == doctest::Approx(2.748376143938713).epsilon(1e-13));
  REQUIRE(d.skewness);
  REQUIRE(d.kurtosis);
  CHECK(*d.skewness == doctest::Approx(0.833503138533666).epsilon(1e-12));
  CHECK(*d.kurtosis == doctest::Approx(0.27660580453699524).epsilon(1e-12));

  const auto one = describe(Vec{4.5});
  CHECK(one.std_dev == 0.0);
  CHECK(one.median == 4.5);
  CHECK_THROWS_AS(describe(Vec{}), Error);
}

TEST_CASE("describe on standard normal draws") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> z(0.0, 1.0);
  Vec draws(1000);
  for (auto& v : draws) v = z(rng);
  const auto s = describe(draws);
  REQUIRE(s.skewness);
  REQUIRE(s.kurtosis);
  CHECK(std::abs(*s.skewness) <= 0.2);
  CHECK(std::abs(*s.kurtosis) <= 0.3);
  CHECK(s.smallest <= s.median);
  CHECK(s.median <= s.largest);
}

TEST_CASE("evaluate small datasets") {
  const Schema one({{"x", Category::Profitability, Direction::Positive, ""}});
  const auto r = evaluate(RawDataset({"a", "b"}, {1.0, 2.0}, one));
  CHECK(r.scores() == Vec{0.0, 100.0});
  CHECK(r.ranking() == Idx{1, 0});
  CHECK(r.weights().values() == Vec{1.0});

  const Schema two({{"ok", Category::Profitability, Direction::Positive, ""},
                    {"flat", Category::Solvency, Direction::Positive, ""}});
  try {
    evaluate(RawDataset({"a", "b", "c"}, {1.0, 3.0, 2.0, 3.0, 3.0, 3.0}, two));
    FAIL("expected DegenerateColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateColumn);
    CHECK(e.indicator() == "flat");
  }
}

TEST_CASE("evaluate options") {
  std::mt19937_64 rng(77);
  const auto ds = testing::random_dataset(rng, 60, 5);

  EvaluateOptions base;
  base.quadrature = QuadratureConfig(2001);
  const auto default_rule = evaluate(ds, base);

  auto classic_opts = base;
  classic_opts.weight_rule = WeightRule::Classic;
  const auto classic = evaluate(ds, classic_opts);
  CHECK(classic.entropies().values() == default_rule.entropies().values());
  double sum = 0.0;
  for (std::size_t j = 0; j < 5; ++j) sum += 1.0 - default_rule.entropies()[j];
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(classic.weights()[j] == doctest::Approx((1.0 - default_rule.entropies()[j]) / sum));
  }

  auto discrete_opts = base;
  discrete_opts.method = EntropyMethod::Discrete;
  const auto discrete = run_pipeline(ds, discrete_opts);
  CHECK(discrete.cdfs.empty());
  const auto normalized = normalize_matrix(ds);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(discrete.report.entropies()[j] == discrete_entropy(normalized.column(j)));
  }

  auto fixed = base;
  fixed.bandwidth = 0.1;
  fixed.boundary_correction = false;
  const auto fixed_run = run_pipeline(ds, fixed);
  REQUIRE(fixed_run.cdfs.size() == 5);
  CHECK(fixed_run.cdfs[0].bandwidth() == 0.1);
  CHECK_FALSE(fixed_run.cdfs[0].boundary_correction());

  auto scaled = base;
  scaled.scale = 1.0;
  const auto unit = evaluate(ds, scaled);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    CHECK(unit.scores()[i] * 100.0 == doctest::Approx(default_rule.scores()[i]).epsilon(1e-12));
  }

  auto bad = base;
  bad.bandwidth = -1.0;
  CHECK_THROWS_AS(evaluate(ds, bad), Error);
}

TEST_CASE("evaluate end to end on a 105 x 17 synthetic dataset") {
  std::mt19937_64 rng(105);
  const auto ds = testing::random_dataset(rng, 105, 17);
  EvaluateOptions opts;
  opts.quadrature = QuadratureConfig(2001);
  const auto r = evaluate(ds, opts);
  CHECK(r.scores().size() == 105);
  CHECK(r.weights().size() == 17);
  double sum = 0.0;
  for (double w : r.weights().values()) sum += w;
  CHECK(std::abs(sum - 1.0) <= 1e-12);
  for (double s : r.scores()) {
    CHECK(s >= 0.0);
    CHECK(s <= 100.0);
  }
  CHECK(r.stats().obs == 105);
  CHECK(r.stats().smallest <= r.stats().median);
  CHECK(r.stats().median <= r.stats().largest);

  opts.threads = 3;
  const auto threaded = evaluate(ds, opts);
  CHECK(threaded.scores() == r.scores());
  CHECK(threaded.weights().values() == r.weights().values());
}
