#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ewm/core_model.hpp"
#include "ewm/density.hpp"
#include "ewm/entropy_weights.hpp"

namespace ewm {

/// F_i = scale * sum_j w_j s_ij. The weighted sum is divided by the sum of the
/// weights accumulated in the same order, so a row of ones scores exactly
/// `scale`; results are clamped into [0, scale].
std::vector<double> composite_scores(const NormalizedMatrix& matrix, const WeightVector& weights,
                                     double scale = 100.0);

/// Indices ordered by score descending; ties keep input order.
std::vector<std::size_t> rank(std::span<const double> scores);

/// Mean, median, sample standard deviation, bias-corrected sample skewness
/// and excess kurtosis, extremes and count. Skewness and kurtosis are left
/// unset for n < 4 or zero variance. Throws InvalidArgument on empty input.
DescriptiveStats describe(std::span<const double> scores);

enum class EntropyMethod { Continuous, Discrete };

struct EvaluateOptions {
  EntropyMethod method = EntropyMethod::Continuous;
  WeightRule weight_rule = WeightRule::Paper;
  /// Fixed kernel bandwidth; nullopt selects Silverman's rule per indicator.
  std::optional<double> bandwidth;
  bool boundary_correction = true;
  QuadratureConfig quadrature;
  double scale = 100.0;
  /// Worker count for per-indicator stages; 0 means all processors.
  std::size_t threads = 1;
};

/// Every intermediate of one pipeline run. `cdfs` is empty for the discrete
/// method.
struct Evaluation {
  NormalizedMatrix normalized;
  std::vector<CdfEstimate> cdfs;
  EvaluationReport report;
};

/// normalize -> CDF estimation -> entropy -> weights -> scores, ranking and
/// statistics. Errors are rethrown with the stage and indicator named.
Evaluation run_pipeline(const RawDataset& dataset, const EvaluateOptions& options = {});

EvaluationReport evaluate(const RawDataset& dataset, const EvaluateOptions& options = {});

}  // namespace ewm
