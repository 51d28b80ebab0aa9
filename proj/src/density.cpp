#include "ewm/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "ewm/error.hpp"

namespace ewm {

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double quantile(std::span<const double> sorted_samples, double p) {
  const std::size_t n = sorted_samples.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "quantile of empty sample");
  const double pos = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, n - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted_samples[lo] + frac * (sorted_samples[hi] - sorted_samples[lo]);
}

double select_bandwidth(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("bandwidth selection needs at least 2 samples, got {}", n));
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const double iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
  const double iqr_scaled = iqr / 1.34;

  double spread = 0.0;
  if (sd > 0.0 && iqr_scaled > 0.0) {
    spread = std::min(sd, iqr_scaled);
  } else if (sd > 0.0) {
    spread = sd;
  } else if (iqr_scaled > 0.0) {
    spread = iqr_scaled;
  } else {
    throw Error(ErrorCode::AllSamplesEqual, "all samples are equal; bandwidth is undefined");
  }
  return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

CdfEstimate::CdfEstimate(std::vector<double> samples, double bandwidth, bool boundary_correction)
    : samples_(std::move(samples)), bandwidth_(bandwidth), boundary_correction_(boundary_correction) {
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) {
    throw Error(ErrorCode::InvalidBandwidth,
                fmt::format("bandwidth must be positive and finite, got {}", bandwidth_));
  }
  if (samples_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("CDF estimation needs at least 2 samples, got {}", samples_.size()));
  }
  for (double s : samples_) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, fmt::format("sample {} outside [0,1]", s));
    }
  }
  std::sort(samples_.begin(), samples_.end());
  if (boundary_correction_) {
    raw_at_zero_ = raw(0.0);
    raw_span_ = raw(1.0) - raw_at_zero_;
    if (!(raw_span_ > 0.0)) {
      throw Error(ErrorCode::InvalidBandwidth,
                  fmt::format("bandwidth {} leaves no kernel mass inside [0,1]", bandwidth_));
    }
  }
}

double CdfEstimate::raw(double x) const {
  double sum = 0.0;
  for (double s : samples_) sum += standard_normal_cdf((x - s) / bandwidth_);
  return sum / static_cast<double>(samples_.size());
}

double CdfEstimate::operator()(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  if (!boundary_correction_) return std::clamp(raw(x), 0.0, 1.0);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return std::clamp((raw(x) - raw_at_zero_) / raw_span_, 0.0, 1.0);
}

std::vector<double> CdfEstimate::evaluate_grid(std::size_t points) const {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  std::vector<double> out(points);
  const double step = 1.0 / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    const double x = k + 1 == points ? 1.0 : static_cast<double>(k) * step;
    out[k] = (*this)(x);
  }
  return out;
}

CdfEstimate estimate_cdf(std::span<const double> samples, double bandwidth,
                         bool boundary_correction) {
  return CdfEstimate(std::vector<double>(samples.begin(), samples.end()), bandwidth,
                     boundary_correction);
}

}  // namespace ewm
