#include "ewm/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace ewm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::DuplicateEntityId: return "DuplicateEntityId";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DegenerateColumn: return "DegenerateColumn";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::AllSamplesEqual: return "AllSamplesEqual";
    case ErrorCode::InvalidBandwidth: return "InvalidBandwidth";
    case ErrorCode::QuadratureOutOfRange: return "QuadratureOutOfRange";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::AllZeroEntropy: return "AllZeroEntropy";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::Profitability: return "profitability";
    case Category::Solvency: return "solvency";
    case Category::SustainableDevelopment: return "sustainable_development";
    case Category::Operation: return "operation";
  }
  return "unknown";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Positive ? "positive" : "inverse";
}

std::string_view category_label(Category category) {
  switch (category) {
    case Category::Profitability: return "Profitability capability";
    case Category::Solvency: return "Solvency";
    case Category::SustainableDevelopment: return "Capacity for sustainable development";
    case Category::Operation: return "Operation capacity";
  }
  return "Unknown";
}

std::optional<Category> parse_category(std::string_view text) {
  for (auto c : {Category::Profitability, Category::Solvency, Category::SustainableDevelopment,
                 Category::Operation}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "positive") return Direction::Positive;
  if (text == "inverse") return Direction::Inverse;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Schema

Schema::Schema(std::vector<IndicatorSpec> indicators) : indicators_(std::move(indicators)) {
  if (indicators_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "schema must contain at least one indicator");
  }
  std::unordered_set<std::string> seen;
  for (const auto& spec : indicators_) {
    if (spec.name.empty()) {
      throw Error(ErrorCode::InvalidArgument, "indicator name must not be empty");
    }
    if (spec.direction != Direction::Positive && spec.direction != Direction::Inverse) {
      throw Error(ErrorCode::InvalidArgument, "indicator direction out of range", spec.name);
    }
    if (!seen.insert(spec.name).second) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("duplicate indicator name '{}'", spec.name), spec.name);
    }
  }
}

std::optional<std::size_t> Schema::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < indicators_.size(); ++j) {
    if (indicators_[j].name == name) return j;
  }
  return std::nullopt;
}

Schema default_schema() {
  using C = Category;
  using D = Direction;
  return Schema({
      {"operating_profit_ratio", C::Profitability, D::Positive, "Operating profit ratio"},
      {"return_on_assets", C::Profitability, D::Positive, "Return on assets"},
      {"return_on_invested_capital", C::Profitability, D::Positive, "Return on invested capital"},
      {"debt_coverage_ratio", C::Solvency, D::Positive, "Debt coverage ratio"},
      {"current_ratio", C::Solvency, D::Positive, "Current ratio"},
      {"operating_cash_flow_to_operating_profit_ratio", C::Solvency, D::Positive,
       "Operating cash flow to operating profit ratio"},
      {"debt_asset_ratio", C::Solvency, D::Inverse, "Debt asset ratio"},
      {"sustainable_growth_rate", C::SustainableDevelopment, D::Positive,
       "Sustainable growth rate"},
      {"hedging_and_proliferating_ratios", C::SustainableDevelopment, D::Positive,
       "Hedging and proliferating ratios"},
      {"total_assets_growth_rate", C::SustainableDevelopment, D::Positive,
       "Total assets growth rate"},
      {"revenue_growth_rate", C::SustainableDevelopment, D::Positive, "Revenue growth rate"},
      {"net_profit_growth_rate", C::SustainableDevelopment, D::Positive,
       "Net profit growth rate"},
      {"receivables_turnover", C::Operation, D::Positive, "Receivables turnover"},
      {"inventory_turnover", C::Operation, D::Positive, "Inventory turnover"},
      {"total_assets_turnover", C::Operation, D::Positive, "Total assets turnover"},
      {"rate_of_cost_profit", C::Operation, D::Positive, "Rate of cost-profit"},
      {"capital_intensity", C::Operation, D::Inverse, "Capital intensity"},
  });
}

std::string schema_to_json(const Schema& schema) {
  nlohmann::ordered_json doc;
  doc["version"] = kSchemaFormatVersion;
  doc["indicators"] = nlohmann::ordered_json::array();
  for (const auto& spec : schema.indicators()) {
    nlohmann::ordered_json record;
    record["name"] = spec.name;
    record["category"] = std::string(to_string(spec.category));
    record["direction"] = std::string(to_string(spec.direction));
    if (!spec.label.empty()) record["label"] = spec.label;
    doc["indicators"].push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

Schema schema_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("schema is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("indicators") || !doc["indicators"].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "schema must be an object with an 'indicators' array");
  }
  if (doc.contains("version") && doc["version"] != kSchemaFormatVersion) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("unsupported schema version {}", doc["version"].dump()));
  }

  std::vector<IndicatorSpec> specs;
  for (const auto& record : doc["indicators"]) {
    auto field = [&](const char* key) -> std::string {
      if (!record.is_object() || !record.contains(key) || !record[key].is_string()) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("indicator record {} lacks string field '{}'", specs.size(), key));
      }
      return record[key].get<std::string>();
    };
    IndicatorSpec spec;
    spec.name = field("name");
    auto category = parse_category(field("category"));
    if (!category) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("unknown category '{}'", record["category"].get<std::string>()),
                  spec.name);
    }
    auto direction = parse_direction(field("direction"));
    if (!direction) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("unknown direction '{}'", record["direction"].get<std::string>()),
                  spec.name);
    }
    spec.category = *category;
    spec.direction = *direction;
    if (record.contains("label")) spec.label = field("label");
    specs.push_back(std::move(spec));
  }
  return Schema(std::move(specs));
}

Schema load_schema_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open schema file '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return schema_from_json(buffer.str());
}

// ---------------------------------------------------------------------------
// RawDataset

RawDataset::RawDataset(std::vector<std::string> entity_ids,
                       std::vector<std::optional<double>> values, Schema schema)
    : entity_ids_(std::move(entity_ids)), values_(std::move(values)), schema_(std::move(schema)) {
  if (values_.size() != entity_ids_.size() * schema_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("grid holds {} cells, expected {} rows x {} indicators", values_.size(),
                            entity_ids_.size(), schema_.size()));
  }
  if (entity_ids_.size() < 2) {
    throw Error(ErrorCode::TooFewRows,
                fmt::format("dataset needs at least 2 rows, got {}", entity_ids_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& id : entity_ids_) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::DuplicateEntityId, fmt::format("duplicate entity id '{}'", id));
    }
  }
}

std::vector<double> RawDataset::column(std::size_t j) const {
  std::vector<double> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    const auto& cell = at(i, j);
    if (!cell) {
      throw Error(ErrorCode::MissingValue,
                  fmt::format("missing value for entity '{}'", entity_ids_[i]), schema_[j].name);
    }
    out.push_back(*cell);
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormalizedMatrix

NormalizedMatrix::NormalizedMatrix(std::size_t rows, std::vector<double> values, Schema schema)
    : rows_(rows), values_(std::move(values)), schema_(std::move(schema)) {
  if (values_.size() != rows_ * schema_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "normalized grid size does not match its shape");
  }
  for (std::size_t j = 0; j < cols(); ++j) {
    bool has_zero = false;
    bool has_one = false;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double v = at(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("normalized entry ({}, {}) = {} outside [0,1]", i, j, v),
                    schema_[j].name);
      }
      has_zero = has_zero || v == 0.0;
      has_one = has_one || v == 1.0;
    }
    if (!has_zero || !has_one) {
      throw Error(ErrorCode::InvalidArgument, "normalized column must attain both 0 and 1",
                  schema_[j].name);
    }
  }
}

std::vector<double> NormalizedMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Vectors and report

EntropyVector::EntropyVector(std::vector<double> entropies) : values_(std::move(entropies)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "entropy vector is empty");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!(values_[j] >= 0.0 && values_[j] <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("entropy[{}] = {} outside [0,1]", j, values_[j]));
    }
  }
}

WeightVector::WeightVector(std::vector<double> weights) : values_(std::move(weights)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "weight vector is empty");
  double sum = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!(values_[j] >= 0.0) || !std::isfinite(values_[j])) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("weight[{}] = {} is invalid", j, values_[j]));
    }
    sum += values_[j];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("weights sum to {}, expected 1", sum));
  }
}

EvaluationReport::EvaluationReport(EntropyVector entropies, WeightVector weights,
                                   std::vector<double> scores, std::vector<std::size_t> ranking,
                                   DescriptiveStats stats, double scale)
    : entropies_(std::move(entropies)),
      weights_(std::move(weights)),
      scores_(std::move(scores)),
      ranking_(std::move(ranking)),
      stats_(stats),
      scale_(scale) {
  if (!(scale_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  if (entropies_.size() != weights_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "entropy and weight vectors differ in length");
  }
  for (double s : scores_) {
    if (!(s >= 0.0 && s <= scale_)) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("score {} outside [0, {}]", s, scale_));
    }
  }
  if (ranking_.size() != scores_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "ranking length differs from score count");
  }
  std::vector<bool> seen(scores_.size(), false);
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    const auto idx = ranking_[k];
    if (idx >= scores_.size() || seen[idx]) {
      throw Error(ErrorCode::InvalidArgument, "ranking is not a permutation");
    }
    seen[idx] = true;
    if (k > 0 && scores_[idx] > scores_[ranking_[k - 1]]) {
      throw Error(ErrorCode::InvalidArgument, "scores along the ranking must be non-increasing");
    }
  }
  if (stats_.obs != scores_.size()) {
    throw Error(ErrorCode::InvalidArgument, "stats.obs differs from score count");
  }
}

}  // namespace ewm
