#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "wavelet.hpp"

namespace wavparity {

enum class Feature : std::size_t { energy = 0, l2_norm = 1, mav = 2 };

inline constexpr std::size_t kNumFeatures = 3;
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames{"energy", "l2_norm",
                                                                          "mav"};

namespace detail {
inline void require_nonempty(std::span<const double> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::empty_vector, "no coefficients");
}
}  // namespace detail

inline double energy(std::span<const double> coeffs) {
  detail::require_nonempty(coeffs);
  double sum = 0.0;
  for (double c : coeffs) sum += c * c;
  return sum;
}

inline double l2_norm(std::span<const double> coeffs) { return std::sqrt(energy(coeffs)); }

inline double mav(std::span<const double> coeffs) {
  detail::require_nonempty(coeffs);
  double sum = 0.0;
  for (double c : coeffs) sum += std::abs(c);
  return sum / static_cast<double>(coeffs.size());
}

/// Dense N x J x F array of per-level statistics, row-major in (n, j, f).
class FeatureTensor {
 public:
  FeatureTensor() = default;
  FeatureTensor(std::size_t num_integers, std::size_t num_levels)
      : num_integers_(num_integers),
        num_levels_(num_levels),
        values_(num_integers * num_levels * kNumFeatures, 0.0) {}

  std::size_t num_integers() const noexcept { return num_integers_; }
  std::size_t num_levels() const noexcept { return num_levels_; }
  static constexpr std::size_t num_features() noexcept { return kNumFeatures; }

  double& at(std::size_t n, std::size_t j, std::size_t f) { return values_[index(n, j, f)]; }
  double at(std::size_t n, std::size_t j, std::size_t f) const { return values_[index(n, j, f)]; }
  double at(std::size_t n, std::size_t j, Feature f) const {
    return at(n, j, static_cast<std::size_t>(f));
  }

  /// Feature f at level j across all integers, the input of one clustering run.
  std::vector<double> column(std::size_t j, std::size_t f) const {
    std::vector<double> out(num_integers_);
    for (std::size_t n = 0; n < num_integers_; ++n) out[n] = at(n, j, f);
    return out;
  }

  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t index(std::size_t n, std::size_t j, std::size_t f) const noexcept {
    return (n * num_levels_ + j) * kNumFeatures + f;
  }

  std::size_t num_integers_ = 0;
  std::size_t num_levels_ = 0;
  std::vector<double> values_;
};

inline std::array<double, kNumFeatures> level_features(std::span<const double> coeffs) {
  const double e = energy(coeffs);
  return {e, std::sqrt(e), mav(coeffs)};
}

/// Statistics come from the detail vectors d_1..d_J. With include_approx the
/// final approximation a_J is appended as an extra pseudo-level.
inline FeatureTensor build_feature_tensor(std::span<const Decomposition> decomps,
                                          bool include_approx = false) {
  if (decomps.empty()) return FeatureTensor(0, 0);
  const std::size_t levels = decomps.front().num_levels();
  const std::size_t length = decomps.front().signal_length;
  for (const auto& d : decomps) {
    if (d.num_levels() != levels || d.signal_length != length) {
      throw Error(ErrorCode::inconsistent_shapes, "decompositions disagree on levels or length");
    }
  }

  const std::size_t tensor_levels = levels + (include_approx ? 1 : 0);
  FeatureTensor tensor(decomps.size(), tensor_levels);
  for (std::size_t n = 0; n < decomps.size(); ++n) {
    for (std::size_t j = 0; j < tensor_levels; ++j) {
      const auto& coeffs = j < levels ? decomps[n].details[j] : decomps[n].final_approx;
      const auto stats = level_features(coeffs);
      for (std::size_t f = 0; f < kNumFeatures; ++f) tensor.at(n, j, f) = stats[f];
    }
  }
  return tensor;
}

}  // namespace wavparity
