#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ewm/core_model.hpp"
#include "ewm/density.hpp"

namespace ewm {

/// Uniform grid for composite Simpson integration on [0,1].
class QuadratureConfig {
 public:
  static constexpr std::size_t kDefaultPoints = 10'001;
  static constexpr double kDefaultEpsilon = 1e-12;

  /// points must be odd and >= 3; epsilon must lie in (0, 1e-6].
  QuadratureConfig() : QuadratureConfig(kDefaultPoints) {}
  explicit QuadratureConfig(std::size_t points, double epsilon = kDefaultEpsilon);

  std::size_t points() const noexcept { return points_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  std::size_t points_;
  double epsilon_;
};

/// Tolerance past [0,1] that is absorbed by clamping; anything further out
/// raises QuadratureOutOfRange.
inline constexpr double kEntropyClampSlack = 1e-9;

/// H = -e * integral_0^1 phi(x) ln phi(x) dx from CDF values sampled on the
/// uniform grid x_k = k / (points - 1). The integrand is taken as 0 wherever
/// phi <= epsilon.
double continuous_entropy_from_grid(std::span<const double> phi, double epsilon);

double continuous_entropy(const CdfEstimate& cdf, const QuadratureConfig& config = QuadratureConfig{});

/// Same quadrature for an arbitrary CDF-like callable on [0,1].
double continuous_entropy(const std::function<double(double)>& cdf,
                          const QuadratureConfig& config = QuadratureConfig{});

/// Normalized Shannon entropy -(1/ln n) sum p_i ln p_i with p_i = s_i / sum s.
/// Entries must be non-negative; throws ZeroColumn when they sum to zero.
double discrete_entropy(std::span<const double> column);

enum class WeightRule {
  /// w_j proportional to H_j.
  Paper,
  /// w_j proportional to 1 - H_j, the classical entropy weight method.
  Classic,
};

/// Normalizes entropies (or 1 - entropies under WeightRule::Classic) to sum to
/// one, accumulating left to right. Throws AllZeroEntropy when the total is 0.
WeightVector compute_weights(const EntropyVector& entropies, WeightRule rule = WeightRule::Paper);

/// Same, for raw non-negative scores that need not be bounded by 1 (only the
/// classic rule requires every value to be at most 1).
WeightVector compute_weights(std::span<const double> entropies, WeightRule rule = WeightRule::Paper);

}  // namespace ewm
