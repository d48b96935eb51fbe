#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavparity {

enum class ErrorCode {
  overflowing_value,
  invalid_length,
  non_binary_sample,
  odd_length,
  length_mismatch,
  too_many_levels,
  non_power_of_two,
  empty_vector,
  inconsistent_shapes,
  too_few_points,
  shape_mismatch,
  non_positive_weight,
  invalid_range,
  empty_input,
  invalid_band,
  invalid_config,
  unknown_wavelet,
  malformed_csv,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::overflowing_value: return "OverflowingValue";
    case ErrorCode::invalid_length: return "InvalidLength";
    case ErrorCode::non_binary_sample: return "NonBinarySample";
    case ErrorCode::odd_length: return "OddLength";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::too_many_levels: return "TooManyLevels";
    case ErrorCode::non_power_of_two: return "NonPowerOfTwo";
    case ErrorCode::empty_vector: return "EmptyVector";
    case ErrorCode::inconsistent_shapes: return "InconsistentShapes";
    case ErrorCode::too_few_points: return "TooFewPoints";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::non_positive_weight: return "NonPositiveWeight";
    case ErrorCode::invalid_range: return "InvalidRange";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::invalid_band: return "InvalidBand";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::unknown_wavelet: return "UnknownWavelet";
    case ErrorCode::malformed_csv: return "MalformedCsv";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the sweep) can branch on the kind without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavparity
