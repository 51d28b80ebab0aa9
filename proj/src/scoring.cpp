#include "ewm/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ewm/normalize.hpp"
#include "ewm/parallel.hpp"

namespace ewm {

std::vector<double> composite_scores(const NormalizedMatrix& matrix, const WeightVector& weights,
                                     double scale) {
  if (matrix.cols() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("matrix has {} indicators but {} weights were given", matrix.cols(),
                            weights.size()));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("scale must be positive, got {}", scale));
  }
  double weight_total = 0.0;
  for (double w : weights.values()) weight_total += w;

  std::vector<double> scores(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < matrix.cols(); ++j) acc += weights[j] * matrix.at(i, j);
    scores[i] = std::clamp(scale * (acc / weight_total), 0.0, scale);
  }
  return scores;
}

std::vector<std::size_t> rank(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

DescriptiveStats describe(std::span<const double> scores) {
  const std::size_t n = scores.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot describe an empty score list");

  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(n);

  DescriptiveStats stats;
  stats.obs = n;
  stats.smallest = sorted.front();
  stats.largest = sorted.back();
  stats.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  stats.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / nd;

  // Central moments m_k = (1/n) sum (x - mean)^k.
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : sorted) {
    const double d = v - stats.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double ss = m2;
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;

  stats.std_dev = n > 1 ? std::sqrt(ss / (nd - 1.0)) : 0.0;
  if (n >= 4 && m2 > 0.0) {
    const double g1 = m3 / std::pow(m2, 1.5);
    const double g2 = m4 / (m2 * m2) - 3.0;
    stats.skewness = std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) * g1;
    stats.kurtosis = (nd - 1.0) / ((nd - 2.0) * (nd - 3.0)) * ((nd + 1.0) * g2 + 6.0);
  }
  return stats;
}

Evaluation run_pipeline(const RawDataset& dataset, const EvaluateOptions& options) {
  NormalizedMatrix normalized = normalize_matrix(dataset, options.threads);
  const std::size_t m = normalized.cols();
  const auto& schema = normalized.schema();

  std::vector<std::optional<CdfEstimate>> cdfs(m);
  std::vector<double> entropies(m, 0.0);

  parallel_for(m, options.threads, [&](std::size_t j) {
    const auto& name = schema[j].name;
    const auto column = normalized.column(j);
    const char* stage = "density";
    try {
      if (options.method == EntropyMethod::Discrete) {
        stage = "entropy";
        entropies[j] = discrete_entropy(column);
        return;
      }
      const double h = options.bandwidth ? *options.bandwidth : select_bandwidth(column);
      cdfs[j].emplace(estimate_cdf(column, h, options.boundary_correction));
      stage = "entropy";
      entropies[j] = continuous_entropy(*cdfs[j], options.quadrature);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}: indicator '{}': {}", stage, name, e.what()), name);
    }
  });

  EntropyVector entropy_vector(std::move(entropies));
  WeightVector weights = [&] {
    try {
      return compute_weights(entropy_vector, options.weight_rule);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("weights: {}", e.what()));
    }
  }();

  auto scores = composite_scores(normalized, weights, options.scale);
  auto ranking = rank(scores);
  const auto stats = describe(scores);

  std::vector<CdfEstimate> estimates;
  for (auto& c : cdfs) {
    if (c) estimates.push_back(std::move(*c));
  }
  EvaluationReport report(std::move(entropy_vector), std::move(weights), std::move(scores),
                          std::move(ranking), stats, options.scale);
  return {std::move(normalized), std::move(estimates), std::move(report)};
}

EvaluationReport evaluate(const RawDataset& dataset, const EvaluateOptions& options) {
  return run_pipeline(dataset, options).report;
}

}  // namespace ewm
