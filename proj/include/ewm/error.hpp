#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ewm {

enum class ErrorCode {
  InvalidArgument,
  // ingest
  HeaderMismatch,
  EmptyInput,
  TooFewRows,
  DuplicateEntityId,
  MalformedCsv,
  IoError,
  // normalize
  DegenerateColumn,
  NonFiniteInput,
  MissingValue,
  // density
  AllSamplesEqual,
  InvalidBandwidth,
  // entropy_weights
  QuadratureOutOfRange,
  ZeroColumn,
  AllZeroEntropy,
  // scoring
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `indicator()` is empty unless the
/// error concerns one specific indicator column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string indicator = {})
      : std::runtime_error(message), code_(code), indicator_(std::move(indicator)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& indicator() const noexcept { return indicator_; }

 private:
  ErrorCode code_;
  std::string indicator_;
};

}  // namespace ewm
