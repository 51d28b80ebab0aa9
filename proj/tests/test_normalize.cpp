#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ewm/normalize.hpp"
#include "support.hpp"

using namespace ewm;
using Vec = std::vector<double>;

TEST_CASE("normalize_positive examples") {
  CHECK(normalize_positive(Vec{2, 4, 6}) == Vec{0, 0.5, 1});
  CHECK(normalize_positive(Vec{-1, 0, 3}) == Vec{0, 0.25, 1});
}

TEST_CASE("normalize_inverse examples") {
  CHECK(normalize_inverse(Vec{2, 4, 6}) == Vec{1, 0.5, 0});
  CHECK(normalize_inverse(Vec{0, 1}) == Vec{1, 0});
}

TEST_CASE("normalize errors") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([] { normalize_positive(Vec{5, 5, 5}); }) == ErrorCode::DegenerateColumn);
  CHECK(code([] { normalize_inverse(Vec{5, 5}); }) == ErrorCode::DegenerateColumn);
  CHECK(code([] { normalize_positive(Vec{1, std::numeric_limits<double>::infinity()}); }) ==
        ErrorCode::NonFiniteInput);
  CHECK(code([] { normalize_positive(Vec{1, std::nan("")}); }) == ErrorCode::NonFiniteInput);
}

TEST_CASE("column properties over random inputs") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(3.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 40;
    Vec c(n);
    for (auto& v : c) v = gauss(rng);
    if (*std::max_element(c.begin(), c.end()) == *std::min_element(c.begin(), c.end())) continue;

    const auto pos = normalize_positive(c);
    const auto inv = normalize_inverse(c);
    Vec neg(n);
    std::transform(c.begin(), c.end(), neg.begin(), [](double v) { return -v; });

    CHECK(inv == normalize_positive(neg));
    CHECK(std::count(pos.begin(), pos.end(), 0.0) >= 1);
    CHECK(std::count(pos.begin(), pos.end(), 1.0) >= 1);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(pos[i] >= 0.0);
      CHECK(pos[i] <= 1.0);
      CHECK(pos[i] + inv[i] == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("normalize_matrix applies schema directions") {
  const Schema schema({{"a", Category::Profitability, Direction::Positive, ""},
                       {"b", Category::Solvency, Direction::Inverse, ""}});
  const RawDataset ds({"x", "y"}, {1.0, 10.0, 3.0, 20.0}, schema);
  const auto s = normalize_matrix(ds);
  CHECK(s.values() == Vec{0, 1, 1, 0});
}

TEST_CASE("normalize_matrix names the degenerate indicator") {
  const Schema schema({{"fine", Category::Profitability, Direction::Positive, ""},
                       {"flat", Category::Solvency, Direction::Inverse, ""}});
  const RawDataset ds({"x", "y", "z"}, {1.0, 4.0, 2.0, 4.0, 3.0, 4.0}, schema);
  try {
    normalize_matrix(ds);
    FAIL("expected DegenerateColumn");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateColumn);
    CHECK(e.indicator() == "flat");
    CHECK(std::string(e.what()).find("flat") != std::string::npos);
  }
}

TEST_CASE("normalize_matrix: affine invariance, row equivariance, thread independence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ds = testing::random_dyadic_dataset(rng, 20 + trial, 1 + trial % 6);
    const auto base = normalize_matrix(ds);

    std::uniform_int_distribution<int> pow2(-3, 3);
    std::uniform_int_distribution<int> tick(-65536, 65536);
    const std::size_t col = static_cast<std::size_t>(trial) % ds.cols();
    const auto mapped =
        testing::map_column(ds, col, std::ldexp(1.0, pow2(rng)), tick(rng) / 1024.0);
    CHECK(normalize_matrix(mapped).values() == base.values());

    std::vector<std::size_t> perm(ds.rows());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto permuted = normalize_matrix(testing::permute_rows(ds, perm));
    for (std::size_t i = 0; i < ds.rows(); ++i) {
      for (std::size_t j = 0; j < ds.cols(); ++j) CHECK(permuted.at(i, j) == base.at(perm[i], j));
    }

    CHECK(normalize_matrix(ds, 4).values() == base.values());
  }
}

TEST_CASE("normalize_matrix: general affine maps agree to rounding") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> slope(0.01, 100.0);
  std::uniform_real_distribution<double> offset(-1e3, 1e3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ds = testing::random_dataset(rng, 30, 4);
    const auto base = normalize_matrix(ds);
    const auto mapped = normalize_matrix(testing::map_column(ds, trial % 4, slope(rng), offset(rng)));
    for (std::size_t k = 0; k < base.values().size(); ++k) {
      CHECK(std::abs(mapped.values()[k] - base.values()[k]) <= 1e-9);
    }
  }
}
