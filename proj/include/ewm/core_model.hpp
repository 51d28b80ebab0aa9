#pragma once

// Shared domain types for the entropy-weighted scoring pipeline. Every type
// checks its invariants on construction and is immutable afterwards.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ewm/error.hpp"

namespace ewm {

enum class Category { Profitability, Solvency, SustainableDevelopment, Operation };
enum class Direction { Positive, Inverse };

std::string_view to_string(Category category);
std::string_view to_string(Direction direction);
/// Human-readable category heading used by the text reports.
std::string_view category_label(Category category);
std::optional<Category> parse_category(std::string_view text);
std::optional<Direction> parse_direction(std::string_view text);

struct IndicatorSpec {
  std::string name;
  Category category = Category::Profitability;
  Direction direction = Direction::Positive;
  /// Display label for reports; falls back to `name` when empty.
  std::string label;

  const std::string& display_label() const { return label.empty() ? name : label; }
  bool operator==(const IndicatorSpec&) const = default;
};

class Schema {
 public:
  explicit Schema(std::vector<IndicatorSpec> indicators);

  std::size_t size() const noexcept { return indicators_.size(); }
  const IndicatorSpec& operator[](std::size_t j) const { return indicators_[j]; }
  const std::vector<IndicatorSpec>& indicators() const noexcept { return indicators_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Schema&) const = default;

 private:
  std::vector<IndicatorSpec> indicators_;
};

/// The 17 financial competitiveness indicators, grouped into profitability,
/// solvency, sustainable development and operation capacity. Debt asset ratio
/// and capital intensity are inverse; everything else is positive.
Schema default_schema();

/// Version of the schema file format written by `schema_to_json`.
inline constexpr int kSchemaFormatVersion = 1;

std::string schema_to_json(const Schema& schema);
/// Throws Error{InvalidArgument} on malformed documents.
Schema schema_from_json(std::string_view text);
Schema load_schema_file(const std::string& path);

/// Raw n x m indicator grid, row-major, with missing cells as nullopt.
class RawDataset {
 public:
  RawDataset(std::vector<std::string> entity_ids, std::vector<std::optional<double>> values,
             Schema schema);

  std::size_t rows() const noexcept { return entity_ids_.size(); }
  std::size_t cols() const noexcept { return schema_.size(); }
  const std::vector<std::string>& entity_ids() const noexcept { return entity_ids_; }
  const Schema& schema() const noexcept { return schema_; }
  const std::optional<double>& at(std::size_t i, std::size_t j) const {
    return values_[i * cols() + j];
  }
  std::span<const std::optional<double>> row(std::size_t i) const {
    return {values_.data() + i * cols(), cols()};
  }
  /// Column j; throws Error{MissingValue} if any cell of the column is absent.
  std::vector<double> column(std::size_t j) const;

 private:
  std::vector<std::string> entity_ids_;
  std::vector<std::optional<double>> values_;
  Schema schema_;
};

/// Dimensionless matrix: entries in [0,1], each column attains both 0 and 1.
class NormalizedMatrix {
 public:
  NormalizedMatrix(std::size_t rows, std::vector<double> values, Schema schema);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return schema_.size(); }
  const Schema& schema() const noexcept { return schema_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * cols() + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * cols(), cols()}; }
  std::vector<double> column(std::size_t j) const;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t rows_;
  std::vector<double> values_;
  Schema schema_;
};

class EntropyVector {
 public:
  /// Every entry must lie in [0,1].
  explicit EntropyVector(std::vector<double> entropies);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Entries must be non-negative and sum to 1 within kSumTolerance.
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

struct DescriptiveStats {
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;
  /// Undefined for n < 4 or zero variance.
  std::optional<double> kurtosis;
  std::optional<double> skewness;
  double smallest = 0.0;
  double largest = 0.0;
  std::size_t obs = 0;
};

class EvaluationReport {
 public:
  /// Scores must lie in [0, scale]; ranking must be a permutation of the
  /// row indices along which scores are non-increasing.
  EvaluationReport(EntropyVector entropies, WeightVector weights, std::vector<double> scores,
                   std::vector<std::size_t> ranking, DescriptiveStats stats, double scale = 100.0);

  const EntropyVector& entropies() const noexcept { return entropies_; }
  const WeightVector& weights() const noexcept { return weights_; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
  const DescriptiveStats& stats() const noexcept { return stats_; }
  double scale() const noexcept { return scale_; }

 private:
  EntropyVector entropies_;
  WeightVector weights_;
  std::vector<double> scores_;
  std::vector<std::size_t> ranking_;
  DescriptiveStats stats_;
  double scale_;
};

}  // namespace ewm
