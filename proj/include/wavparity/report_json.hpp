#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "evaluation.hpp"
#include "features.hpp"

namespace wavparity {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const RunConfig& c) {
  ordered_json j;
  j["range_start"] = c.range_start;
  j["range_end"] = c.range_end;
  j["wavelet"] = c.wavelet;
  j["levels"] = c.num_levels;
  j["bit_order"] = to_string(c.bit_order);
  j["weights"] = c.effective_weights();
  j["threshold"] = c.threshold;
  j["include_approx"] = c.include_approx;
  j["init"] = to_string(c.kmeans.init);
  j["seed"] = c.kmeans.seed;
  j["tolerance"] = c.kmeans.tolerance;
  j["max_iterations"] = c.kmeans.max_iterations;
  j["bucket_size"] = c.bucket_size;
  j["band"] = c.band;
  return j;
}

inline ordered_json to_json(const EvalReport& r) {
  ordered_json j;
  j["config"] = to_json(r.config);
  j["num_integers"] = r.num_integers;
  j["signal_length"] = r.signal_length;
  j["accuracy"] = r.overall_accuracy;
  j["reference_accuracy"] = kReferenceAccuracy;
  j["delta_to_reference"] = r.delta_to_reference();

  ordered_json conf;
  conf["odd_as_odd"] = r.confusion_counts.odd_as_odd;
  conf["odd_as_even"] = r.confusion_counts.odd_as_even;
  conf["even_as_odd"] = r.confusion_counts.even_as_odd;
  conf["even_as_even"] = r.confusion_counts.even_as_even;
  j["confusion"] = conf;

  ordered_json cells = ordered_json::array();
  for (std::size_t level = 0; level < r.num_levels; ++level) {
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
      ordered_json cell;
      cell["level"] = level + 1;
      cell["feature"] = std::string(kFeatureNames[f]);
      cell["accuracy"] = r.cell(level, f);
      cells.push_back(cell);
    }
  }
  j["per_cell_accuracy"] = cells;

  ordered_json buckets = ordered_json::array();
  for (const auto& b : r.buckets) {
    ordered_json bj;
    bj["lo"] = b.lo;
    bj["hi"] = b.hi;
    bj["count"] = b.count;
    bj["accuracy"] = b.accuracy;
    buckets.push_back(bj);
  }
  j["magnitude_buckets"] = buckets;

  ordered_json boundary;
  boundary["band"] = r.boundary.band;
  boundary["inside_count"] = r.boundary.inside_count;
  boundary["outside_count"] = r.boundary.outside_count;
  boundary["inside_error_rate"] = r.boundary.inside_error_rate;
  boundary["outside_error_rate"] = r.boundary.outside_error_rate;
  j["boundary"] = boundary;
  return j;
}

/// Ranked sweep entries plus the best accuracy reached by each wavelet family.
inline ordered_json to_json(const std::vector<SweepEntry>& entries) {
  ordered_json ranked = ordered_json::array();
  ordered_json best_by_family = ordered_json::object();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    ordered_json ej;
    ej["rank"] = i + 1;
    if (e.ok()) {
      ej["accuracy"] = e.report->overall_accuracy;
      ej["delta_to_reference"] = e.report->delta_to_reference();
      ej["report"] = to_json(*e.report);
      if (!best_by_family.contains(e.config.wavelet)) {
        best_by_family[e.config.wavelet] = e.report->overall_accuracy;
      }
    } else {
      ej["config"] = to_json(e.config);
      ej["error"] = e.error;
    }
    ranked.push_back(ej);
  }

  ordered_json out;
  out["reference_accuracy"] = kReferenceAccuracy;
  if (!entries.empty() && entries.front().ok()) {
    out["best_accuracy"] = entries.front().report->overall_accuracy;
    out["best_delta_to_reference"] = entries.front().report->delta_to_reference();
  }
  out["best_by_wavelet"] = best_by_family;
  out["entries"] = ranked;
  return out;
}

}  // namespace wavparity
