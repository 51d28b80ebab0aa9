#include "ewm/normalize.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ewm/parallel.hpp"

namespace ewm {
namespace {

struct Range {
  double min;
  double max;
};

Range checked_range(std::span<const double> column) {
  if (column.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("need at least 2 values to normalize, got {}", column.size()));
  }
  for (double v : column) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteInput, fmt::format("value {} is not finite", v));
    }
  }
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  if (!(*hi > *lo)) {
    throw Error(ErrorCode::DegenerateColumn,
                fmt::format("column is constant ({}); max equals min", *lo));
  }
  return {*lo, *hi};
}

}  // namespace

std::vector<double> normalize_positive(std::span<const double> column) {
  const auto [lo, hi] = checked_range(column);
  const double span = hi - lo;
  std::vector<double> out(column.size());
  std::transform(column.begin(), column.end(), out.begin(),
                 [&](double r) { return std::clamp((r - lo) / span, 0.0, 1.0); });
  return out;
}

std::vector<double> normalize_inverse(std::span<const double> column) {
  const auto [lo, hi] = checked_range(column);
  const double span = hi - lo;
  std::vector<double> out(column.size());
  std::transform(column.begin(), column.end(), out.begin(),
                 [&](double r) { return std::clamp((hi - r) / span, 0.0, 1.0); });
  return out;
}

NormalizedMatrix normalize_matrix(const RawDataset& dataset, std::size_t threads) {
  const std::size_t n = dataset.rows();
  const std::size_t m = dataset.cols();
  std::vector<double> values(n * m);

  parallel_for(m, threads, [&](std::size_t j) {
    const auto& spec = dataset.schema()[j];
    try {
      const auto raw = dataset.column(j);
      const auto col = spec.direction == Direction::Positive ? normalize_positive(raw)
                                                             : normalize_inverse(raw);
      for (std::size_t i = 0; i < n; ++i) values[i * m + j] = col[i];
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("normalize: indicator '{}': {}", spec.name, e.what()),
                  spec.name);
    }
  });
  return NormalizedMatrix(n, std::move(values), dataset.schema());
}

}  // namespace ewm
