#include "ewm/entropy_weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace ewm {

QuadratureConfig::QuadratureConfig(std::size_t points, double epsilon)
    : points_(points), epsilon_(epsilon) {
  if (points_ < 3 || points_ % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("quadrature points must be odd and >= 3, got {}", points_));
  }
  if (!(epsilon_ > 0.0 && epsilon_ <= 1e-6)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("quadrature epsilon must lie in (0, 1e-6], got {}", epsilon_));
  }
}

double continuous_entropy_from_grid(std::span<const double> phi, double epsilon) {
  const std::size_t points = phi.size();
  if (points < 3 || points % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("Simpson grid must have an odd number >= 3 of points, got {}", points));
  }
  auto integrand = [epsilon](double p) { return p <= epsilon ? 0.0 : p * std::log(p); };

  // Composite Simpson: h/3 * (f0 + 4 f1 + 2 f2 + ... + 4 f_{N-1} + f_N).
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k + 1 < points; ++k) {
    (k % 2 == 1 ? odd : even) += integrand(phi[k]);
  }
  const double h = 1.0 / static_cast<double>(points - 1);
  const double integral =
      h / 3.0 * (integrand(phi.front()) + 4.0 * odd + 2.0 * even + integrand(phi.back()));
  const double entropy = -std::numbers::e * integral;

  if (!(entropy >= -kEntropyClampSlack && entropy <= 1.0 + kEntropyClampSlack)) {
    throw Error(ErrorCode::QuadratureOutOfRange,
                fmt::format("continuous entropy {} is outside [0,1]; the CDF is invalid", entropy));
  }
  // max(0.0, .) also turns -0.0 into +0.0.
  return std::max(0.0, std::min(entropy, 1.0));
}

double continuous_entropy(const CdfEstimate& cdf, const QuadratureConfig& config) {
  return continuous_entropy_from_grid(cdf.evaluate_grid(config.points()), config.epsilon());
}

double continuous_entropy(const std::function<double(double)>& cdf, const QuadratureConfig& config) {
  const std::size_t points = config.points();
  std::vector<double> phi(points);
  const double step = 1.0 / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    phi[k] = cdf(k + 1 == points ? 1.0 : static_cast<double>(k) * step);
  }
  return continuous_entropy_from_grid(phi, config.epsilon());
}

double discrete_entropy(std::span<const double> column) {
  const std::size_t n = column.size();
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("discrete entropy needs at least 2 entries, got {}", n));
  }
  // Sorted summation keeps the result independent of row order.
  std::vector<double> sorted(column.begin(), column.end());
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted.front() >= 0.0) || !std::isfinite(sorted.back())) {
    throw Error(ErrorCode::InvalidArgument, "discrete entropy needs finite non-negative entries");
  }
  double total = 0.0;
  for (double v : sorted) total += v;
  if (total == 0.0) throw Error(ErrorCode::ZeroColumn, "column sums to zero");

  double acc = 0.0;
  for (double v : sorted) {
    if (v == 0.0) continue;
    const double p = v / total;
    acc += p * std::log(p);
  }
  const double h = -acc / std::log(static_cast<double>(n));
  return std::clamp(h, 0.0, 1.0);
}

WeightVector compute_weights(const EntropyVector& entropies, WeightRule rule) {
  return compute_weights(std::span<const double>(entropies.values()), rule);
}

WeightVector compute_weights(std::span<const double> entropies, WeightRule rule) {
  if (entropies.empty()) throw Error(ErrorCode::InvalidArgument, "no entropies to weight");
  for (double h : entropies) {
    if (!(h >= 0.0) || !std::isfinite(h) || (rule == WeightRule::Classic && h > 1.0)) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("entropy {} cannot be weighted", h));
    }
  }
  std::vector<double> basis(entropies.begin(), entropies.end());
  if (rule == WeightRule::Classic) {
    for (double& v : basis) v = 1.0 - v;
  }
  double total = 0.0;
  for (double v : basis) total += v;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::AllZeroEntropy,
                rule == WeightRule::Paper
                    ? "all entropies are zero; no indicator carries weight"
                    : "all entropies equal one; no indicator diverges under the classic rule");
  }
  for (double& v : basis) v /= total;
  return WeightVector(std::move(basis));
}

}  // namespace ewm
