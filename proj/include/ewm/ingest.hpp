#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ewm/core_model.hpp"

namespace ewm {

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
  std::vector<std::string> dropped_ids;
};

struct IngestResult {
  RawDataset dataset;
  IngestReport report;
};

/// Header of the identifier column.
inline constexpr std::string_view kEntityIdHeader = "entity_id";

/// True for the recognised missing-value markers: empty, "NA", "NaN"
/// (case-insensitive, surrounding whitespace ignored).
bool is_missing_marker(std::string_view cell);

/// Parses one numeric cell. Accepts decimal and scientific notation with a
/// `.` separator; returns nullopt for missing markers and anything that does
/// not parse completely (including decimal commas).
std::optional<double> parse_number(std::string_view cell);

/// Reads comma-separated data whose header starts with `entity_id` followed by
/// indicator columns matched to `schema` by name. Rows with any missing or
/// unparseable indicator cell are dropped and listed in the report.
IngestResult parse_csv(std::istream& source, const Schema& schema);
IngestResult load_csv_file(const std::string& path, const Schema& schema);

enum class FindingKind { DegenerateColumn, NonFiniteValue, MissingValue };

std::string_view to_string(FindingKind kind);

struct ValidationFinding {
  FindingKind kind;
  std::string indicator;
  /// Row the finding refers to, for cell-level findings.
  std::optional<std::string> entity_id;
  std::string message;
};

/// Lists everything that would stop the dataset from being evaluated.
std::vector<ValidationFinding> validate(const RawDataset& dataset);

}  // namespace ewm
