#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "features.hpp"
#include "format.hpp"
#include "pipeline.hpp"
#include "wavelet.hpp"

namespace wavparity {

inline constexpr std::string_view kScoresHeader = "n,label,score,prediction";

/// n,label,score,prediction with the score at 17 significant digits.
inline std::string scores_csv(const PipelineResult& result) {
  std::string out(kScoresHeader);
  out += '\n';
  const auto& ds = result.dataset;
  for (std::size_t i = 0; i < ds.integers.size(); ++i) {
    out += std::to_string(ds.integers[i]);
    out += ',';
    out += to_string(ds.labels[i]);
    out += ',';
    out += format_double(result.scores.scores[i]);
    out += ',';
    out += to_string(result.scores.predictions[i]);
    out += '\n';
  }
  return out;
}

struct ScoreRow {
  std::uint64_t n = 0;
  Parity label = Parity::even;
  double score = 0.0;
  Parity prediction = Parity::even;

  bool operator==(const ScoreRow&) const = default;
};

namespace detail {

inline Parity parse_parity(const std::string& text, std::size_t line) {
  if (text == "odd") return Parity::odd;
  if (text == "even") return Parity::even;
  throw Error(ErrorCode::malformed_csv,
              "line " + std::to_string(line) + ": expected odd or even, got '" + text + "'");
}

}  // namespace detail

inline std::vector<ScoreRow> parse_scores_csv(std::string_view text) {
  std::vector<ScoreRow> rows;
  std::size_t line_no = 0;
  bool seen_header = false;
  for (const auto& raw : detail::split(text, '\n')) {
    ++line_no;
    if (raw.empty()) continue;
    if (!seen_header) {
      if (raw != kScoresHeader) {
        throw Error(ErrorCode::malformed_csv, "missing header '" + std::string(kScoresHeader) + "'");
      }
      seen_header = true;
      continue;
    }
    const auto cells = detail::split(raw, ',');
    if (cells.size() != 4) {
      throw Error(ErrorCode::malformed_csv, "line " + std::to_string(line_no) + ": expected 4 columns");
    }
    ScoreRow row;
    try {
      row.n = detail::parse_number<std::uint64_t>("n", cells[0]);
      row.score = detail::parse_number<double>("score", cells[2]);
    } catch (const Error& e) {
      throw Error(ErrorCode::malformed_csv, "line " + std::to_string(line_no) + ": " + e.what());
    }
    row.label = detail::parse_parity(cells[1], line_no);
    row.prediction = detail::parse_parity(cells[3], line_no);
    rows.push_back(row);
  }
  if (!seen_header) throw Error(ErrorCode::malformed_csv, "empty scores file");
  return rows;
}

/// level,kind,index,value; detail levels first, then the final approximation.
inline std::string coefficients_csv(const Decomposition& decomp) {
  std::ostringstream os;
  os << "level,kind,index,value\n";
  for (std::size_t j = 0; j < decomp.details.size(); ++j) {
    for (std::size_t i = 0; i < decomp.details[j].size(); ++i) {
      os << j + 1 << ",detail," << i << ',' << format_double(decomp.details[j][i]) << '\n';
    }
  }
  for (std::size_t i = 0; i < decomp.final_approx.size(); ++i) {
    os << decomp.num_levels() << ",approx," << i << ',' << format_double(decomp.final_approx[i])
       << '\n';
  }
  return os.str();
}

/// n,level,feature,value. Level numbering starts at 1; with the approximation
/// included it appears as level J + 1.
inline std::string features_csv(std::span<const std::uint64_t> integers, const FeatureTensor& tensor) {
  std::ostringstream os;
  os << "n,level,feature,value\n";
  for (std::size_t n = 0; n < tensor.num_integers(); ++n) {
    for (std::size_t j = 0; j < tensor.num_levels(); ++j) {
      for (std::size_t f = 0; f < kNumFeatures; ++f) {
        os << integers[n] << ',' << j + 1 << ',' << kFeatureNames[f] << ','
           << format_double(tensor.at(n, j, f)) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace wavparity
