#include "ewm/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

namespace ewm {
namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

using Record = std::vector<std::string>;

// RFC 4180 style reader: quoted fields may hold commas, doubled quotes and
// line breaks. Blank lines are skipped.
std::vector<Record> read_records(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;

  auto end_field = [&] {
    current.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.size() == 1 && trim(current[0]).empty();
    if (!blank) records.push_back(std::move(current));
    current.clear();
  };

  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (in_quotes) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field.push_back('"');
          ++k;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!trim(field).empty() || field_was_quoted) {
          throw Error(ErrorCode::MalformedCsv,
                      fmt::format("line {}: unexpected quote inside unquoted field", line));
        }
        field.clear();
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw Error(ErrorCode::MalformedCsv, "unterminated quoted field");
  if (!field.empty() || !current.empty()) end_record();
  return records;
}

}  // namespace

bool is_missing_marker(std::string_view cell) {
  cell = trim(cell);
  return cell.empty() || iequals(cell, "NA") || iequals(cell, "NaN");
}

std::optional<double> parse_number(std::string_view cell) {
  cell = trim(cell);
  if (is_missing_marker(cell)) return std::nullopt;
  // from_chars rejects a leading '+', which spreadsheets occasionally emit.
  if (cell.size() > 1 && cell.front() == '+' && cell[1] != '-') cell.remove_prefix(1);
  double value = 0.0;
  const auto* first = cell.data();
  const auto* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

IngestResult parse_csv(std::istream& source, const Schema& schema) {
  const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  if (source.bad()) throw Error(ErrorCode::IoError, "failed reading CSV input");
  const auto records = read_records(text);
  if (records.empty()) throw Error(ErrorCode::EmptyInput, "input has no header row");

  const Record& header = records.front();
  if (trim(header[0]) != kEntityIdHeader) {
    throw Error(ErrorCode::HeaderMismatch,
                fmt::format("first column must be '{}', found '{}'", kEntityIdHeader,
                            trim(header[0])));
  }

  // column_of[j] = CSV field index holding schema indicator j. Columns that
  // are not in the schema are ignored.
  std::vector<std::size_t> column_of(schema.size(), 0);
  std::vector<bool> matched(schema.size(), false);
  for (std::size_t c = 1; c < header.size(); ++c) {
    const auto name = trim(header[c]);
    if (auto j = schema.index_of(name)) {
      if (matched[*j]) {
        throw Error(ErrorCode::HeaderMismatch,
                    fmt::format("indicator column '{}' appears more than once", name),
                    std::string(name));
      }
      matched[*j] = true;
      column_of[*j] = c;
    }
  }
  for (std::size_t j = 0; j < schema.size(); ++j) {
    if (!matched[j]) {
      throw Error(ErrorCode::HeaderMismatch,
                  fmt::format("no column for indicator '{}'", schema[j].name), schema[j].name);
    }
  }

  if (records.size() == 1) throw Error(ErrorCode::EmptyInput, "input has no data rows");

  IngestReport report;
  std::vector<std::string> ids;
  std::vector<std::optional<double>> values;
  std::unordered_set<std::string> seen_ids;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    ++report.rows_read;
    if (rec.size() > header.size()) {
      throw Error(ErrorCode::MalformedCsv,
                  fmt::format("data row {} has {} fields, header has {}", r, rec.size(),
                              header.size()));
    }
    std::string id{trim(rec[0])};
    if (!id.empty() && !seen_ids.insert(id).second) {
      throw Error(ErrorCode::DuplicateEntityId, fmt::format("duplicate entity id '{}'", id));
    }

    std::vector<std::optional<double>> row(schema.size());
    bool complete = !id.empty();
    for (std::size_t j = 0; j < schema.size() && complete; ++j) {
      const auto c = column_of[j];
      row[j] = c < rec.size() ? parse_number(rec[c]) : std::nullopt;
      complete = row[j].has_value();
    }
    if (!complete) {
      ++report.rows_dropped;
      report.dropped_ids.push_back(id);
      continue;
    }
    ids.push_back(std::move(id));
    values.insert(values.end(), row.begin(), row.end());
  }

  if (ids.size() < 2) {
    throw Error(ErrorCode::TooFewRows,
                fmt::format("only {} complete row(s) remain after dropping {} incomplete row(s)",
                            ids.size(), report.rows_dropped));
  }
  return {RawDataset(std::move(ids), std::move(values), schema), std::move(report)};
}

IngestResult load_csv_file(const std::string& path, const Schema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open input file '{}'", path));
  return parse_csv(in, schema);
}

std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::DegenerateColumn: return "DegenerateColumn";
    case FindingKind::NonFiniteValue: return "NonFiniteValue";
    case FindingKind::MissingValue: return "MissingValue";
  }
  return "Unknown";
}

std::vector<ValidationFinding> validate(const RawDataset& dataset) {
  std::vector<ValidationFinding> findings;
  const auto& schema = dataset.schema();
  for (std::size_t j = 0; j < dataset.cols(); ++j) {
    const auto& name = schema[j].name;
    std::set<double> distinct;
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
      const auto& cell = dataset.at(i, j);
      const auto& id = dataset.entity_ids()[i];
      if (!cell) {
        findings.push_back({FindingKind::MissingValue, name, id, "value is missing"});
      } else if (!std::isfinite(*cell)) {
        findings.push_back(
            {FindingKind::NonFiniteValue, name, id, fmt::format("value {} is not finite", *cell)});
      } else {
        distinct.insert(*cell);
      }
    }
    // Also covers max == min: a constant column has exactly one distinct value.
    if (distinct.size() < 2) {
      findings.push_back({FindingKind::DegenerateColumn, name, std::nullopt,
                          fmt::format("column has {} distinct finite value(s); need at least 2",
                                      distinct.size())});
    }
  }
  return findings;
}

}  // namespace ewm
