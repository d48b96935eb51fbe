#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace wavparity {

struct ClusterModel {
  std::array<double, 2> centroids{0.0, 0.0};
  std::vector<std::uint8_t> assignments;
  double inertia = 0.0;
  std::size_t iterations = 0;
  bool converged = false;

  bool operator==(const ClusterModel&) const = default;
};

enum class InitMethod { min_max, random };

struct KMeansOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 300;
  InitMethod init = InitMethod::min_max;
  std::uint64_t seed = 0;
};

/// Within-cluster sum of squared distances.
inline double inertia(std::span<const double> values, std::span<const std::uint8_t> assignments,
                      const std::array<double, 2>& centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double diff = values[i] - centroids[assignments[i]];
    total += diff * diff;
  }
  return total;
}

/// Nearest centroid, ties going to cluster 0.
inline std::vector<std::uint8_t> assign_nearest(std::span<const double> values,
                                                const std::array<double, 2>& centroids) {
  std::vector<std::uint8_t> out(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::abs(values[i] - centroids[1]) < std::abs(values[i] - centroids[0]) ? 1 : 0;
  }
  return out;
}

namespace detail {

inline void require_points(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::too_few_points,
                "need at least 2 values, got " + std::to_string(values.size()));
  }
}

inline ClusterModel degenerate_model(std::span<const double> values) {
  ClusterModel model;
  const double v = values.empty() ? 0.0 : values.front();
  model.centroids = {v, v};
  model.assignments.assign(values.size(), 0);
  model.converged = true;
  return model;
}

// Moves the point farthest from the populated centroid into an empty cluster.
inline void repair_empty(std::span<const double> values, std::vector<std::uint8_t>& assignments,
                         const std::array<double, 2>& centroids) {
  std::array<std::size_t, 2> sizes{0, 0};
  for (auto a : assignments) ++sizes[a];
  for (std::uint8_t empty = 0; empty < 2; ++empty) {
    if (sizes[empty] != 0) continue;
    const std::uint8_t full = 1 - empty;
    std::size_t far = 0;
    double far_dist = -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double dist = std::abs(values[i] - centroids[full]);
      if (dist > far_dist) {
        far_dist = dist;
        far = i;
      }
    }
    assignments[far] = empty;
    --sizes[full];
    ++sizes[empty];
  }
}

inline std::array<double, 2> cluster_means(std::span<const double> values,
                                           std::span<const std::uint8_t> assignments,
                                           const std::array<double, 2>& fallback) {
  std::array<double, 2> sums{0.0, 0.0};
  std::array<std::size_t, 2> counts{0, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    sums[assignments[i]] += values[i];
    ++counts[assignments[i]];
  }
  std::array<double, 2> out = fallback;
  for (std::size_t c = 0; c < 2; ++c) {
    if (counts[c] != 0) out[c] = sums[c] / static_cast<double>(counts[c]);
  }
  return out;
}

inline std::array<double, 2> initial_centroids(std::span<const double> values,
                                               const KMeansOptions& options) {
  if (options.init == InitMethod::random) {
    // Raw engine output keeps the draw identical across standard libraries.
    std::mt19937_64 engine(options.seed);
    const std::size_t first = static_cast<std::size_t>(engine() % values.size());
    std::size_t second = static_cast<std::size_t>(engine() % (values.size() - 1));
    if (second >= first) ++second;
    auto c = std::array<double, 2>{values[first], values[second]};
    if (c[1] < c[0]) std::swap(c[0], c[1]);
    return c;
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {*lo, *hi};
}

}  // namespace detail

/// Lloyd iteration for k = 2 on scalar data. When inertia_trace is given, the
/// inertia after every centroid update is appended to it.
inline ClusterModel kmeans_1d(std::span<const double> values, const KMeansOptions& options = {},
                              std::vector<double>* inertia_trace = nullptr) {
  detail::require_points(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return detail::degenerate_model(values);

  ClusterModel model;
  model.centroids = detail::initial_centroids(values, options);
  auto assignments = assign_nearest(values, model.centroids);

  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    detail::repair_empty(values, assignments, model.centroids);
    const auto updated = detail::cluster_means(values, assignments, model.centroids);
    const double shift = std::max(std::abs(updated[0] - model.centroids[0]),
                                  std::abs(updated[1] - model.centroids[1]));
    model.centroids = updated;
    model.iterations = it;
    if (inertia_trace != nullptr) {
      inertia_trace->push_back(inertia(values, assignments, model.centroids));
    }

    auto next = assign_nearest(values, model.centroids);
    if (next == assignments) {
      model.converged = true;
      break;
    }
    if (shift < options.tolerance) {
      assignments = std::move(next);
      detail::repair_empty(values, assignments, model.centroids);
      model.centroids = detail::cluster_means(values, assignments, model.centroids);
      model.converged = true;
      break;
    }
    assignments = std::move(next);
  }

  model.assignments = std::move(assignments);
  model.inertia = inertia(values, model.assignments, model.centroids);
  return model;
}

/// Globally optimal 2-means in one dimension: the optimum is a threshold on the
/// sorted values, so every boundary between distinct values is tried.
inline ClusterModel optimal_2means_1d(std::span<const double> values) {
  detail::require_points(values);
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  if (values[order.front()] == values[order.back()]) return detail::degenerate_model(values);

  auto group_sse = [&](std::size_t begin, std::size_t end) {
    double mean = 0.0;
    for (std::size_t i = begin; i < end; ++i) mean += values[order[i]];
    mean /= static_cast<double>(end - begin);
    double sse = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = values[order[i]] - mean;
      sse += d * d;
    }
    return sse;
  };

  std::size_t best_split = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t split = 1; split < n; ++split) {
    if (values[order[split - 1]] == values[order[split]]) continue;
    const double wcss = group_sse(0, split) + group_sse(split, n);
    if (wcss < best) {
      best = wcss;
      best_split = split;
    }
  }

  ClusterModel model;
  model.assignments.assign(n, 0);
  for (std::size_t i = best_split; i < n; ++i) model.assignments[order[i]] = 1;
  model.centroids = detail::cluster_means(values, model.assignments, {0.0, 0.0});
  model.inertia = inertia(values, model.assignments, model.centroids);
  model.converged = true;
  return model;
}

}  // namespace wavparity
