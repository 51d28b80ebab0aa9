#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ewm/core_model.hpp"

namespace ewm::testing {

inline Schema random_schema(std::mt19937_64& rng, std::size_t m) {
  std::bernoulli_distribution inverse(0.3);
  std::vector<IndicatorSpec> specs;
  for (std::size_t j = 0; j < m; ++j) {
    specs.push_back({fmt::format("ind{}", j), static_cast<Category>(j % 4),
                     inverse(rng) ? Direction::Inverse : Direction::Positive, ""});
  }
  return Schema(std::move(specs));
}

/// Columns mix several shapes (uniform, skewed, heavy-tailed, few levels) so
/// every column has at least two distinct values.
inline RawDataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  auto schema = random_schema(rng, m);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(fmt::format("e{:04}", i));

  std::vector<std::optional<double>> values(n * m);
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  std::lognormal_distribution<double> logn(0.0, 1.0);
  std::student_t_distribution<double> heavy(2.0);
  std::uniform_int_distribution<int> levels(0, 3);
  std::uniform_int_distribution<int> shape(0, 3);
  for (std::size_t j = 0; j < m; ++j) {
    const int kind = shape(rng);
    for (std::size_t i = 0; i < n; ++i) {
      double v = 0.0;
      switch (kind) {
        case 0: v = uni(rng); break;
        case 1: v = logn(rng); break;
        case 2: v = heavy(rng); break;
        default: v = static_cast<double>(levels(rng));
      }
      values[i * m + j] = v;
    }
    // Guarantee two distinct values.
    values[j] = 0.0;
    values[m + j] = 1.0;
  }
  return RawDataset(std::move(ids), std::move(values), std::move(schema));
}

/// Values on a dyadic grid (multiples of 1/1024 in [-64, 64]) so that affine
/// maps with power-of-two slope and dyadic offset are exact in binary64.
inline RawDataset random_dyadic_dataset(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  auto schema = random_schema(rng, m);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(fmt::format("e{:04}", i));
  std::uniform_int_distribution<int> ticks(-65536, 65536);
  std::vector<std::optional<double>> values(n * m);
  for (std::size_t k = 0; k < n * m; ++k) values[k] = ticks(rng) / 1024.0;
  for (std::size_t j = 0; j < m; ++j) {
    values[j] = -1.0;
    values[m + j] = 1.0;
  }
  return RawDataset(std::move(ids), std::move(values), std::move(schema));
}

inline RawDataset map_column(const RawDataset& ds, std::size_t col, double a, double b) {
  std::vector<std::optional<double>> values;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    for (std::size_t j = 0; j < ds.cols(); ++j) {
      const double v = *ds.at(i, j);
      values.push_back(j == col ? a * v + b : v);
    }
  }
  return RawDataset(ds.entity_ids(), std::move(values), ds.schema());
}

/// Row i of the result is row perm[i] of the input.
inline RawDataset permute_rows(const RawDataset& ds, const std::vector<std::size_t>& perm) {
  std::vector<std::string> ids;
  std::vector<std::optional<double>> values;
  for (auto src : perm) {
    ids.push_back(ds.entity_ids()[src]);
    for (std::size_t j = 0; j < ds.cols(); ++j) values.push_back(ds.at(src, j));
  }
  return RawDataset(std::move(ids), std::move(values), ds.schema());
}

}  // namespace ewm::testing
