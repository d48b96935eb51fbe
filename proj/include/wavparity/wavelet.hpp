#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "signal_codec.hpp"

namespace wavparity {

/// Orthonormal two-channel filter bank. The highpass is always derived from
/// the lowpass by the quadrature-mirror rule g[k] = (-1)^k h[support-1-k].
class WaveletFilter {
 public:
  WaveletFilter(std::string name, std::vector<double> lowpass)
      : name_(std::move(name)), lowpass_(std::move(lowpass)) {
    if (lowpass_.empty() || lowpass_.size() % 2 != 0) {
      throw Error(ErrorCode::invalid_length, "filter support must be positive and even");
    }
    const std::size_t support = lowpass_.size();
    highpass_.resize(support);
    for (std::size_t k = 0; k < support; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      highpass_[k] = sign * lowpass_[support - 1 - k];
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const double> lowpass() const noexcept { return lowpass_; }
  std::span<const double> highpass() const noexcept { return highpass_; }
  std::size_t support() const noexcept { return lowpass_.size(); }

 private:
  std::string name_;
  std::vector<double> lowpass_;
  std::vector<double> highpass_;
};

inline WaveletFilter haar_filter() {
  const double c = 1.0 / std::numbers::sqrt2;
  return WaveletFilter("haar", {c, c});
}

/// Daubechies 4-tap filter (two vanishing moments).
inline WaveletFilter db4_filter() {
  const double s3 = std::sqrt(3.0);
  const double denom = 4.0 * std::numbers::sqrt2;
  return WaveletFilter("db4", {(1.0 + s3) / denom, (3.0 + s3) / denom, (3.0 - s3) / denom,
                               (1.0 - s3) / denom});
}

inline WaveletFilter filter_by_name(const std::string& name) {
  if (name == "haar") return haar_filter();
  if (name == "db4") return db4_filter();
  throw Error(ErrorCode::unknown_wavelet, "no filter named '" + name + "' (expected haar or db4)");
}

struct StepResult {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// One analysis step with periodic extension: out[i] = sum_k f[k] x[(2i+k) mod n].
inline StepResult dwt_step(std::span<const double> signal, const WaveletFilter& filter) {
  const std::size_t n = signal.size();
  if (n % 2 != 0) throw Error(ErrorCode::odd_length, "signal length " + std::to_string(n));
  if (n == 0) throw Error(ErrorCode::invalid_length, "signal is empty");

  const auto h = filter.lowpass();
  const auto g = filter.highpass();
  StepResult out{std::vector<double>(n / 2, 0.0), std::vector<double>(n / 2, 0.0)};
  for (std::size_t i = 0; i < n / 2; ++i) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const double x = signal[(2 * i + k) % n];
      a += h[k] * x;
      d += g[k] * x;
    }
    out.approx[i] = a;
    out.detail[i] = d;
  }
  return out;
}

/// Synthesis step; the transpose of dwt_step, hence its inverse for orthonormal banks.
inline std::vector<double> idwt_step(std::span<const double> approx, std::span<const double> detail,
                                     const WaveletFilter& filter) {
  if (approx.size() != detail.size()) {
    throw Error(ErrorCode::length_mismatch, "approx has " + std::to_string(approx.size()) +
                                                " coefficients, detail has " +
                                                std::to_string(detail.size()));
  }
  const std::size_t n = 2 * approx.size();
  const auto h = filter.lowpass();
  const auto g = filter.highpass();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < approx.size(); ++i) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      out[(2 * i + k) % n] += h[k] * approx[i] + g[k] * detail[i];
    }
  }
  return out;
}

struct Decomposition {
  std::vector<std::vector<double>> details;  // details[j] is the level j+1 detail
  std::vector<double> final_approx;
  std::size_t signal_length = 0;

  std::size_t num_levels() const noexcept { return details.size(); }

  std::size_t coefficient_count() const noexcept {
    std::size_t total = final_approx.size();
    for (const auto& d : details) total += d.size();
    return total;
  }
};

inline Decomposition wavedec(std::span<const double> signal, const WaveletFilter& filter,
                             std::size_t num_levels) {
  const std::size_t n = signal.size();
  if (!is_power_of_two(n)) {
    throw Error(ErrorCode::non_power_of_two, "signal length " + std::to_string(n));
  }
  if (num_levels == 0 || num_levels >= 64 || (std::size_t{1} << num_levels) > n) {
    throw Error(ErrorCode::too_many_levels, std::to_string(num_levels) +
                                                " levels requested for length " +
                                                std::to_string(n));
  }

  Decomposition out;
  out.signal_length = n;
  out.details.reserve(num_levels);
  std::vector<double> running(signal.begin(), signal.end());
  for (std::size_t level = 0; level < num_levels; ++level) {
    auto step = dwt_step(running, filter);
    out.details.push_back(std::move(step.detail));
    running = std::move(step.approx);
  }
  out.final_approx = std::move(running);
  return out;
}

inline std::vector<double> waverec(const Decomposition& decomp, const WaveletFilter& filter) {
  std::vector<double> running = decomp.final_approx;
  for (auto it = decomp.details.rbegin(); it != decomp.details.rend(); ++it) {
    running = idwt_step(running, *it, filter);
  }
  return running;
}

}  // namespace wavparity
