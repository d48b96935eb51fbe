#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "pipeline.hpp"

namespace wavparity {

inline double accuracy(std::span<const Parity> predictions, std::span<const Parity> labels) {
  if (predictions.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "predictions and labels differ in length");
  }
  if (labels.empty()) throw Error(ErrorCode::empty_input, "no predictions to score");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) correct += predictions[i] == labels[i] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(labels.size());
}

/// Rows are the true parity, columns the prediction.
struct Confusion {
  std::size_t odd_as_odd = 0;
  std::size_t odd_as_even = 0;
  std::size_t even_as_odd = 0;
  std::size_t even_as_even = 0;

  std::size_t total() const noexcept { return odd_as_odd + odd_as_even + even_as_odd + even_as_even; }
  std::size_t correct() const noexcept { return odd_as_odd + even_as_even; }

  bool operator==(const Confusion&) const = default;
};

inline Confusion confusion(std::span<const Parity> predictions, std::span<const Parity> labels) {
  if (predictions.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "predictions and labels differ in length");
  }
  Confusion c;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool truth_odd = labels[i] == Parity::odd;
    const bool pred_odd = predictions[i] == Parity::odd;
    if (truth_odd) {
      ++(pred_odd ? c.odd_as_odd : c.odd_as_even);
    } else {
      ++(pred_odd ? c.even_as_odd : c.even_as_even);
    }
  }
  return c;
}

struct MagnitudeBucket {
  std::uint64_t lo = 0;  // inclusive
  std::uint64_t hi = 0;  // inclusive
  std::size_t count = 0;
  double accuracy = 0.0;

  bool operator==(const MagnitudeBucket&) const = default;
};

/// Accuracy per block of bucket_size consecutive magnitudes, ascending; empty blocks are skipped.
inline std::vector<MagnitudeBucket> magnitude_buckets(std::span<const std::uint64_t> integers,
                                                      std::span<const Parity> predictions,
                                                      std::span<const Parity> labels,
                                                      std::uint64_t bucket_size) {
  if (bucket_size == 0) throw Error(ErrorCode::invalid_config, "bucket size must be >= 1");
  if (integers.size() != predictions.size() || integers.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "bucket inputs differ in length");
  }

  struct Tally {
    std::uint64_t bucket;
    std::size_t count = 0;
    std::size_t correct = 0;
  };
  std::vector<Tally> tallies;
  for (std::size_t i = 0; i < integers.size(); ++i) {
    const std::uint64_t bucket = integers[i] / bucket_size;
    auto it = std::lower_bound(tallies.begin(), tallies.end(), bucket,
                               [](const Tally& t, std::uint64_t b) { return t.bucket < b; });
    if (it == tallies.end() || it->bucket != bucket) it = tallies.insert(it, Tally{bucket});
    ++it->count;
    if (predictions[i] == labels[i]) ++it->correct;
  }

  std::vector<MagnitudeBucket> out;
  out.reserve(tallies.size());
  for (const auto& t : tallies) {
    out.push_back({t.bucket * bucket_size, t.bucket * bucket_size + bucket_size - 1, t.count,
                   static_cast<double>(t.correct) / static_cast<double>(t.count)});
  }
  return out;
}

struct BoundaryStats {
  double band = 0.0;
  std::size_t inside_count = 0;
  std::size_t outside_count = 0;
  double inside_error_rate = 0.0;   // 0 when the band is empty
  double outside_error_rate = 0.0;  // 0 when nothing lies outside

  bool operator==(const BoundaryStats&) const = default;
};

/// Splits integers by |S - 0.5| < band and compares misclassification rates.
inline BoundaryStats boundary_report(std::span<const double> scores,
                                     std::span<const Parity> predictions,
                                     std::span<const Parity> labels, double band) {
  if (!(band > 0.0 && band < 0.5)) throw Error(ErrorCode::invalid_band, "band must lie in (0, 0.5)");
  if (scores.size() != predictions.size() || scores.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "boundary inputs differ in length");
  }
  BoundaryStats stats;
  stats.band = band;
  std::size_t inside_wrong = 0;
  std::size_t outside_wrong = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool wrong = predictions[i] != labels[i];
    if (std::abs(scores[i] - 0.5) < band) {
      ++stats.inside_count;
      inside_wrong += wrong ? 1 : 0;
    } else {
      ++stats.outside_count;
      outside_wrong += wrong ? 1 : 0;
    }
  }
  if (stats.inside_count) {
    stats.inside_error_rate = static_cast<double>(inside_wrong) / static_cast<double>(stats.inside_count);
  }
  if (stats.outside_count) {
    stats.outside_error_rate =
        static_cast<double>(outside_wrong) / static_cast<double>(stats.outside_count);
  }
  return stats;
}

struct ScatterPoint {
  std::uint64_t n = 0;
  double score = 0.0;
  Parity parity = Parity::even;

  bool operator==(const ScatterPoint&) const = default;
};

/// Points for integers in [lo, hi] that exist in the scored dataset.
inline std::vector<ScatterPoint> scatter_data(std::span<const std::uint64_t> integers,
                                              std::span<const double> scores,
                                              std::span<const Parity> labels, std::uint64_t lo,
                                              std::uint64_t hi) {
  if (integers.size() != scores.size() || integers.size() != labels.size()) {
    throw Error(ErrorCode::length_mismatch, "scatter inputs differ in length");
  }
  std::vector<ScatterPoint> out;
  for (std::size_t i = 0; i < integers.size(); ++i) {
    if (integers[i] >= lo && integers[i] <= hi) out.push_back({integers[i], scores[i], labels[i]});
  }
  return out;
}

/// Accuracy of one cell used alone: an integer is called odd iff it sits in
/// that cell's odd-dominant cluster.
inline double cell_accuracy(const ClusterModel& model, const ClusterParity& mapping,
                            std::span<const Parity> labels) {
  std::vector<Parity> predictions(labels.size());
  for (std::size_t n = 0; n < labels.size(); ++n) {
    predictions[n] = model.assignments[n] == mapping.odd_dominant ? Parity::odd : Parity::even;
  }
  return accuracy(predictions, labels);
}

struct EvalReport {
  RunConfig config;
  std::size_t num_integers = 0;
  std::size_t signal_length = 0;
  double overall_accuracy = 0.0;
  Confusion confusion_counts;
  std::size_t num_levels = 0;  // rows of per_cell_accuracy (tensor levels)
  std::vector<double> per_cell_accuracy;  // row-major levels x features
  std::vector<MagnitudeBucket> buckets;
  BoundaryStats boundary;

  double delta_to_reference() const noexcept { return overall_accuracy - kReferenceAccuracy; }
  double cell(std::size_t j, std::size_t f) const { return per_cell_accuracy[j * kNumFeatures + f]; }
};

inline EvalReport evaluate(const PipelineResult& result, const RunConfig& config) {
  const auto& labels = result.dataset.labels;
  const auto& predictions = result.scores.predictions;

  EvalReport report;
  report.config = config;
  report.num_integers = labels.size();
  report.signal_length = result.signal_length;
  report.overall_accuracy = accuracy(predictions, labels);
  report.confusion_counts = confusion(predictions, labels);
  report.num_levels = result.clusters.num_levels;
  for (std::size_t i = 0; i < result.clusters.models.size(); ++i) {
    report.per_cell_accuracy.push_back(
        cell_accuracy(result.clusters.models[i], result.cluster_parity[i], labels));
  }
  report.buckets =
      magnitude_buckets(result.dataset.integers, predictions, labels, config.bucket_size);
  report.boundary = boundary_report(result.scores.scores, predictions, labels, config.band);
  return report;
}

inline EvalReport run_and_evaluate(const RunConfig& config) {
  return evaluate(run_pipeline(config), config);
}

/// Axis values for a sweep; an empty axis keeps the base config's value.
struct SweepGrid {
  std::vector<std::string> wavelets;
  std::vector<BitOrder> bit_orders;
  std::vector<std::vector<double>> weights;
  std::vector<bool> include_approx;
  std::vector<std::size_t> num_levels;
};

struct SweepEntry {
  RunConfig config;
  std::optional<EvalReport> report;
  std::string error;  // set when the run failed

  bool ok() const noexcept { return report.has_value(); }
};

inline std::vector<RunConfig> expand_grid(const RunConfig& base, const SweepGrid& grid) {
  auto axis = [](const auto& values, const auto& fallback) {
    using T = std::decay_t<decltype(fallback)>;
    return values.empty() ? std::vector<T>{fallback} : std::vector<T>(values.begin(), values.end());
  };
  const auto wavelets = axis(grid.wavelets, base.wavelet);
  const auto orders = axis(grid.bit_orders, base.bit_order);
  const auto weights = axis(grid.weights, base.weights);
  const auto approx = axis(grid.include_approx, base.include_approx);
  const auto levels = axis(grid.num_levels, base.num_levels);

  std::vector<RunConfig> out;
  for (const auto& wavelet : wavelets) {
    for (auto order : orders) {
      for (std::size_t level : levels) {
        for (bool a : approx) {
          for (const auto& w : weights) {
            RunConfig c = base;
            c.wavelet = wavelet;
            c.bit_order = order;
            c.num_levels = level;
            c.include_approx = a;
            c.weights = w;
            out.push_back(std::move(c));
          }
        }
      }
    }
  }
  return out;
}

/// One pipeline run per grid point. Failed runs are kept with their error.
/// Ordered by accuracy (descending), then by config_key; failures last.
inline std::vector<SweepEntry> sweep(const RunConfig& base, const SweepGrid& grid) {
  std::vector<SweepEntry> entries;
  for (auto& config : expand_grid(base, grid)) {
    SweepEntry entry{config, std::nullopt, {}};
    try {
      entry.report = run_and_evaluate(config);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }

  std::stable_sort(entries.begin(), entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
    if (a.ok() != b.ok()) return a.ok();
    if (a.ok() && a.report->overall_accuracy != b.report->overall_accuracy) {
      return a.report->overall_accuracy > b.report->overall_accuracy;
    }
    return config_key(a.config) < config_key(b.config);
  });
  return entries;
}

/// Bit order x approximation on/off x default and uniform weights, for each
/// wavelet. An empty weight vector selects the config's default weights.
inline SweepGrid default_sweep_grid(const RunConfig& base,
                                    std::vector<std::string> wavelets = {"haar", "db4"}) {
  SweepGrid grid;
  grid.wavelets = std::move(wavelets);
  grid.bit_orders = {BitOrder::lsb_first, BitOrder::msb_first};
  grid.include_approx = {false, true};
  grid.weights = {{}, std::vector<double>(base.num_levels, 1.0)};
  return grid;
}

}  // namespace wavparity
