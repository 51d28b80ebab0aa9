#pragma once

// Text and CSV renderings of evaluation results. Text tables round for
// reading (6 decimals for entropies and weights, 2 for scores); CSV output
// carries the shortest representation that round-trips each double. All
// output uses '.' as the decimal separator regardless of locale.

#include <cstddef>
#include <string>
#include <vector>

#include "ewm/core_model.hpp"
#include "ewm/density.hpp"

namespace ewm {

/// Category | Indicator | Entropy | Weight.
std::string weights_table(const Schema& schema, const EntropyVector& entropies,
                          const WeightVector& weights);
std::string weights_csv(const Schema& schema, const EntropyVector& entropies,
                        const WeightVector& weights);

/// Ranking | Entity | Score, best first.
std::string ranking_table(const std::vector<std::string>& entity_ids, const EvaluationReport& report);
std::string scores_csv(const std::vector<std::string>& entity_ids, const EvaluationReport& report);

/// Mean, median, Std. Dev, Kurtosis, Skewness, Smallest, Largest, Obs.
std::string stats_block(const DescriptiveStats& stats);
std::string stats_csv(const DescriptiveStats& stats);

std::string normalized_csv(const std::vector<std::string>& entity_ids, const NormalizedMatrix& matrix);

/// x,phi pairs on `points` evenly spaced grid points in [0,1].
std::string cdf_csv(const CdfEstimate& cdf, std::size_t points);

}  // namespace ewm
