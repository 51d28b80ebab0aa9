#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ewm/core_model.hpp"

namespace ewm {

/// (r - min) / (max - min). The minimum maps to exactly 0, the maximum to 1.
/// Throws DegenerateColumn when max == min and NonFiniteInput on inf/nan.
std::vector<double> normalize_positive(std::span<const double> column);

/// (max - r) / (max - min). The minimum maps to exactly 1, the maximum to 0.
std::vector<double> normalize_inverse(std::span<const double> column);

/// Normalizes every column by its schema direction. Column failures are
/// rethrown with the indicator name attached.
NormalizedMatrix normalize_matrix(const RawDataset& dataset, std::size_t threads = 1);

}  // namespace ewm
