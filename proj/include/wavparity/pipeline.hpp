#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "clustering.hpp"
#include "config.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "features.hpp"
#include "signal_codec.hpp"
#include "wavelet.hpp"

namespace wavparity {

/// Majority-vote outcome for one (level, feature) cell.
struct ClusterParity {
  std::array<double, 2> odd_fraction{0.5, 0.5};
  std::uint8_t odd_dominant = 1;

  bool operator==(const ClusterParity&) const = default;
};

/// Odd fraction per cluster. An empty cluster is uninformative (0.5) and can
/// never be odd-dominant; on a tie cluster 1 is the odd-dominant one.
inline ClusterParity map_clusters(const ClusterModel& model, std::span<const Parity> labels) {
  if (model.assignments.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "assignments and labels differ in length");
  }
  std::array<std::size_t, 2> sizes{0, 0};
  std::array<std::size_t, 2> odd{0, 0};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = model.assignments[i];
    ++sizes[c];
    if (labels[i] == Parity::odd) ++odd[c];
  }

  ClusterParity out;
  for (std::size_t c = 0; c < 2; ++c) {
    out.odd_fraction[c] =
        sizes[c] == 0 ? 0.5 : static_cast<double>(odd[c]) / static_cast<double>(sizes[c]);
  }
  if (sizes[1] == 0) {
    out.odd_dominant = 0;
  } else if (sizes[0] == 0) {
    out.odd_dominant = 1;
  } else {
    out.odd_dominant = out.odd_fraction[0] > out.odd_fraction[1] ? 0 : 1;
  }
  return out;
}

/// N x J x F odd-probabilities, same layout as FeatureTensor.
class ProbabilityTensor {
 public:
  ProbabilityTensor() = default;
  ProbabilityTensor(std::size_t num_integers, std::size_t num_levels, std::size_t num_features)
      : n_(num_integers), j_(num_levels), f_(num_features), values_(n_ * j_ * f_, 0.0) {}

  std::size_t num_integers() const noexcept { return n_; }
  std::size_t num_levels() const noexcept { return j_; }
  std::size_t num_features() const noexcept { return f_; }

  double& at(std::size_t n, std::size_t j, std::size_t f) { return values_[(n * j_ + j) * f_ + f]; }
  double at(std::size_t n, std::size_t j, std::size_t f) const {
    return values_[(n * j_ + j) * f_ + f];
  }

  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const ProbabilityTensor&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t j_ = 0;
  std::size_t f_ = 0;
  std::vector<double> values_;
};

/// Row-major J x F grid of per-cell clustering results.
struct ClusterGrid {
  std::size_t num_levels = 0;
  std::size_t num_features = 0;
  std::vector<ClusterModel> models;

  const ClusterModel& at(std::size_t j, std::size_t f) const { return models[j * num_features + f]; }

  bool operator==(const ClusterGrid&) const = default;
};

inline ProbabilityTensor build_probability_tensor(const ClusterGrid& grid,
                                                  std::span<const Parity> labels,
                                                  std::vector<ClusterParity>* maps = nullptr) {
  if (grid.models.size() != grid.num_levels * grid.num_features) {
    throw Error(ErrorCode::shape_mismatch, "cluster grid size does not match its dimensions");
  }
  for (const auto& m : grid.models) {
    if (m.assignments.size() != labels.size()) {
      throw Error(ErrorCode::shape_mismatch, "cluster model covers a different number of integers");
    }
  }

  ProbabilityTensor tensor(labels.size(), grid.num_levels, grid.num_features);
  if (maps != nullptr) maps->clear();
  for (std::size_t j = 0; j < grid.num_levels; ++j) {
    for (std::size_t f = 0; f < grid.num_features; ++f) {
      const auto& model = grid.at(j, f);
      const auto mapping = map_clusters(model, labels);
      for (std::size_t n = 0; n < labels.size(); ++n) {
        tensor.at(n, j, f) = mapping.odd_fraction[model.assignments[n]];
      }
      if (maps != nullptr) maps->push_back(mapping);
    }
  }
  return tensor;
}

struct ScoreVector {
  std::vector<double> scores;
  std::vector<Parity> predictions;
  std::vector<double> weights;
  double normalizer = 0.0;

  bool operator==(const ScoreVector&) const = default;
};

/// S_n = (1/Z) sum_j w_j sum_f P[n][j][f] with Z = F * sum_j w_j, so S_n is a
/// weighted mean of probabilities and stays in [0, 1].
///
/// Evaluated as 0.5 + (1/Z) sum_j w_j sum_f (P - 0.5): an integer whose
/// probabilities are all exactly 0.5 then scores exactly 0.5 for any weights,
/// instead of landing an ulp to either side of the threshold.
inline ScoreVector oddness_scores(const ProbabilityTensor& probs, std::span<const double> weights) {
  if (weights.size() != probs.num_levels()) {
    throw Error(ErrorCode::shape_mismatch, "need one weight per level");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::non_positive_weight, "weights must be positive");
  }

  ScoreVector out;
  out.weights.assign(weights.begin(), weights.end());
  out.normalizer = static_cast<double>(probs.num_features()) *
                   std::accumulate(weights.begin(), weights.end(), 0.0);
  out.scores.resize(probs.num_integers());
  for (std::size_t n = 0; n < probs.num_integers(); ++n) {
    double deviation = 0.0;
    for (std::size_t j = 0; j < probs.num_levels(); ++j) {
      double level_sum = 0.0;
      for (std::size_t f = 0; f < probs.num_features(); ++f) level_sum += probs.at(n, j, f) - 0.5;
      deviation += weights[j] * level_sum;
    }
    out.scores[n] = std::clamp(0.5 + deviation / out.normalizer, 0.0, 1.0);
  }
  return out;
}

inline std::vector<Parity> classify(std::span<const double> scores, double threshold = 0.5) {
  std::vector<Parity> out(scores.size());
  for (std::size_t n = 0; n < scores.size(); ++n) {
    out[n] = scores[n] > threshold ? Parity::odd : Parity::even;
  }
  return out;
}

inline void classify(ScoreVector& scores, double threshold = 0.5) {
  scores.predictions = classify(scores.scores, threshold);
}

struct PipelineResult {
  Dataset dataset;
  std::size_t signal_length = 0;
  FeatureTensor features;
  ClusterGrid clusters;
  std::vector<ClusterParity> cluster_parity;  // row-major J x F, parallel to clusters.models
  ProbabilityTensor probabilities;
  ScoreVector scores;
};

/// Clustering for one cell. A single integer cannot be split, so it forms one cluster.
inline ClusterModel fit_cell(std::span<const double> values, const KMeansOptions& options) {
  if (values.size() < 2) return detail::degenerate_model(values);
  return kmeans_1d(values, options);
}

inline std::vector<Decomposition> decompose_range(std::uint64_t range_start,
                                                  std::uint64_t range_end,
                                                  std::size_t signal_length,
                                                  const WaveletFilter& filter,
                                                  std::size_t num_levels, BitOrder order) {
  std::vector<Decomposition> out;
  out.reserve(range_end - range_start + 1);
  for (std::uint64_t n = range_start;; ++n) {
    const auto signal = encode(n, signal_length, order);
    out.push_back(wavedec(signal.samples, filter, num_levels));
    if (n == range_end) break;
  }
  return out;
}

/// encode -> wavedec -> features -> per-cell k-means, then the label-dependent
/// stages: majority vote -> probability tensor -> oddness scores -> decision.
inline PipelineResult run_pipeline(const RunConfig& config) {
  config.validate();
  const auto filter = filter_by_name(config.wavelet);

  PipelineResult result;
  result.signal_length = config.signal_length();
  const auto decomps = decompose_range(config.range_start, config.range_end, result.signal_length,
                                       filter, config.num_levels, config.bit_order);
  result.features = build_feature_tensor(decomps, config.include_approx);

  const std::size_t levels = result.features.num_levels();
  result.clusters.num_levels = levels;
  result.clusters.num_features = kNumFeatures;
  result.clusters.models.reserve(levels * kNumFeatures);
  for (std::size_t j = 0; j < levels; ++j) {
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
      result.clusters.models.push_back(fit_cell(result.features.column(j, f), config.kmeans));
    }
  }

  // Labels exist only from here on; nothing above can see them.
  result.dataset = make_dataset(config.range_start, config.range_end);
  result.probabilities =
      build_probability_tensor(result.clusters, result.dataset.labels, &result.cluster_parity);
  result.scores = oddness_scores(result.probabilities, config.effective_weights());
  classify(result.scores, config.threshold);
  return result;
}

}  // namespace wavparity
