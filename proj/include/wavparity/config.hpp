#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "clustering.hpp"
#include "error.hpp"
#include "format.hpp"
#include "signal_codec.hpp"
#include "wavelet.hpp"

namespace wavparity {

inline constexpr double kReferenceAccuracy = 0.6967;

struct RunConfig {
  std::uint64_t range_start = 0;
  std::uint64_t range_end = 10000;
  std::string wavelet = "haar";
  std::size_t num_levels = 3;
  BitOrder bit_order = BitOrder::lsb_first;
  std::vector<double> weights;  // empty selects default_weights()
  double threshold = 0.5;
  bool include_approx = false;
  KMeansOptions kmeans;
  std::uint64_t bucket_size = 1000;
  double band = 0.05;

  /// Levels seen by clustering: the detail levels plus the optional approximation.
  std::size_t tensor_levels() const noexcept { return num_levels + (include_approx ? 1 : 0); }

  /// Dataset-wide signal length. Normally pad_length(range_end); raised to
  /// 2^num_levels for tiny ranges so the requested depth stays valid.
  std::size_t signal_length() const noexcept {
    const std::size_t needed = num_levels < 63 ? std::size_t{1} << num_levels : 0;
    return std::max(pad_length(range_end), needed);
  }

  /// 1.0, 1.1, 1.2, ... : each deeper level slightly heavier.
  std::vector<double> default_weights() const {
    std::vector<double> w(num_levels);
    for (std::size_t j = 0; j < num_levels; ++j) w[j] = 1.0 + 0.1 * static_cast<double>(j);
    return w;
  }

  /// One weight per tensor level. The approximation pseudo-level inherits the
  /// deepest detail weight unless the caller supplied J + 1 weights.
  std::vector<double> effective_weights() const {
    std::vector<double> w = weights.empty() ? default_weights() : weights;
    if (include_approx && w.size() == num_levels && !w.empty()) w.push_back(w.back());
    return w;
  }

  void validate() const {
    if (range_start > range_end) {
      throw Error(ErrorCode::invalid_range, "range start exceeds range end");
    }
    if (num_levels < 1 || num_levels > 32) {
      throw Error(ErrorCode::invalid_config, "levels must be in 1..32");
    }
    filter_by_name(wavelet);
    const auto w = effective_weights();
    if (w.size() != tensor_levels()) {
      throw Error(ErrorCode::invalid_config, "expected " + std::to_string(tensor_levels()) +
                                                 " weights, got " + std::to_string(w.size()));
    }
    for (double x : w) {
      if (!(x > 0.0)) throw Error(ErrorCode::non_positive_weight, "weights must be positive");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
      throw Error(ErrorCode::invalid_config, "threshold must lie in (0, 1)");
    }
    if (!(kmeans.tolerance > 0.0) || kmeans.max_iterations == 0) {
      throw Error(ErrorCode::invalid_config, "k-means tolerance and max iterations must be positive");
    }
    if (bucket_size == 0) throw Error(ErrorCode::invalid_config, "bucket size must be >= 1");
    if (!(band > 0.0 && band < 0.5)) throw Error(ErrorCode::invalid_band, "band must lie in (0, 0.5)");
  }
};

inline std::string format_weights(const std::vector<double>& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ',';
    out += format_double(weights[i]);
  }
  return out;
}

inline std::string to_string(InitMethod init) { return init == InitMethod::min_max ? "minmax" : "random"; }

/// Stable text identity of a config; used to order sweep ties.
inline std::string config_key(const RunConfig& c) {
  std::ostringstream os;
  os << c.wavelet << '|' << c.num_levels << '|' << to_string(c.bit_order) << '|'
     << (c.include_approx ? 1 : 0) << '|' << format_weights(c.effective_weights()) << '|'
     << c.range_start << ':' << c.range_end << '|' << format_double(c.threshold) << '|'
     << to_string(c.kmeans.init) << ':' << c.kmeans.seed;
  return os.str();
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorCode::invalid_config, "bad value '" + text + "' for " + key);
  }
  return value;
}

inline bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw Error(ErrorCode::invalid_config, "bad boolean '" + text + "' for " + key);
}

}  // namespace detail

inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 2) {
    throw Error(ErrorCode::invalid_config, "range must look like START:END, got '" + text + "'");
  }
  return {detail::parse_number<std::uint64_t>("range", parts[0]),
          detail::parse_number<std::uint64_t>("range", parts[1])};
}

inline std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : detail::split(text, ',')) {
    out.push_back(detail::parse_number<double>("weights", part));
  }
  return out;
}

/// Accepts "minmax", "random" or "random:<seed>".
inline void parse_init(const std::string& text, KMeansOptions& options) {
  if (text == "minmax" || text == "min_max") {
    options.init = InitMethod::min_max;
    return;
  }
  if (text.rfind("random", 0) == 0) {
    options.init = InitMethod::random;
    if (text.size() > 6) {
      if (text[6] != ':') throw Error(ErrorCode::invalid_config, "bad init '" + text + "'");
      options.seed = detail::parse_number<std::uint64_t>("init", text.substr(7));
    }
    return;
  }
  throw Error(ErrorCode::invalid_config, "bad init '" + text + "'");
}

/// Applies one `key = value` setting. Keys match the long CLI flag names,
/// with dashes and underscores interchangeable.
inline void apply_setting(RunConfig& config, std::string key, const std::string& value) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "range") {
    std::tie(config.range_start, config.range_end) = parse_range(value);
  } else if (key == "range_start") {
    config.range_start = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "range_end") {
    config.range_end = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "wavelet") {
    config.wavelet = value;
  } else if (key == "levels" || key == "num_levels") {
    config.num_levels = detail::parse_number<std::size_t>(key, value);
  } else if (key == "bit_order") {
    config.bit_order = parse_bit_order(value);
  } else if (key == "weights") {
    config.weights = parse_weights(value);
  } else if (key == "threshold") {
    config.threshold = detail::parse_number<double>(key, value);
  } else if (key == "include_approx") {
    config.include_approx = detail::parse_bool(key, value);
  } else if (key == "tolerance") {
    config.kmeans.tolerance = detail::parse_number<double>(key, value);
  } else if (key == "max_iterations") {
    config.kmeans.max_iterations = detail::parse_number<std::size_t>(key, value);
  } else if (key == "init") {
    parse_init(value, config.kmeans);
  } else if (key == "seed") {
    config.kmeans.seed = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "bucket_size") {
    config.bucket_size = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "band") {
    config.band = detail::parse_number<double>(key, value);
  } else {
    throw Error(ErrorCode::invalid_config, "unknown key '" + key + "'");
  }
}

/// Flat `key = value` lines; `#` starts a comment, blank lines are ignored.
inline std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::invalid_config, "line " + std::to_string(line_no) + ": missing '='");
    }
    auto key = detail::trim(std::string_view(line).substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::invalid_config, "line " + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::move(key), detail::trim(std::string_view(line).substr(eq + 1)));
  }
  return out;
}

inline RunConfig parse_run_config(std::string_view text, RunConfig base = {}) {
  for (const auto& [key, value] : parse_key_values(text)) apply_setting(base, key, value);
  return base;
}

}  // namespace wavparity
