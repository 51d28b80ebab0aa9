#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ewm {

/// Silverman's rule of thumb: 0.9 * min(sd, IQR / 1.34) * n^(-1/5), with the
/// sample standard deviation (n - 1 denominator) and the interquartile range
/// from linearly interpolated quantiles. When one spread measure is zero the
/// other is used; throws AllSamplesEqual when both are.
double select_bandwidth(std::span<const double> samples);

/// Linearly interpolated sample quantile (the "type 7" definition).
double quantile(std::span<const double> sorted_samples, double p);

/// Gaussian-kernel estimate of a cumulative distribution on [0,1].
///
/// The raw estimate is the mean of the per-sample Gaussian CDFs,
///   raw(x) = (1/n) sum_i Phi((x - s_i) / h).
/// With boundary correction the estimate is rescaled so that it runs from
/// exactly 0 at x = 0 to exactly 1 at x = 1:
///   phi(x) = (raw(x) - raw(0)) / (raw(1) - raw(0)).
/// Without it, raw(x) is returned clamped to [0,1].
///
/// Samples are stored sorted, so the estimate does not depend on the order
/// they were supplied in. Instances are immutable and safe to evaluate from
/// several threads.
class CdfEstimate {
 public:
  CdfEstimate(std::vector<double> samples, double bandwidth, bool boundary_correction);

  double operator()(double x) const;
  /// phi at x_k = k / (points - 1), k = 0 .. points - 1.
  std::vector<double> evaluate_grid(std::size_t points) const;

  const std::vector<double>& support_samples() const noexcept { return samples_; }
  double bandwidth() const noexcept { return bandwidth_; }
  bool boundary_correction() const noexcept { return boundary_correction_; }

 private:
  double raw(double x) const;

  std::vector<double> samples_;
  double bandwidth_;
  bool boundary_correction_;
  double raw_at_zero_ = 0.0;
  double raw_span_ = 1.0;
};

/// Throws InvalidBandwidth for non-positive or non-finite h and
/// InvalidArgument for fewer than 2 samples or samples outside [0,1].
CdfEstimate estimate_cdf(std::span<const double> samples, double bandwidth,
                         bool boundary_correction = true);

/// Standard normal CDF.
double standard_normal_cdf(double z);

}  // namespace ewm
