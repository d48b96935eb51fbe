#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace wavparity {

enum class BitOrder { lsb_first, msb_first };

inline std::string to_string(BitOrder order) {
  return order == BitOrder::lsb_first ? "lsb_first" : "msb_first";
}

inline BitOrder parse_bit_order(const std::string& text) {
  if (text == "lsb_first" || text == "lsb") return BitOrder::lsb_first;
  if (text == "msb_first" || text == "msb") return BitOrder::msb_first;
  throw Error(ErrorCode::invalid_config, "unknown bit order '" + text + "'");
}

/// Binary expansion of an integer laid out as a real-valued signal.
struct BitSignal {
  std::uint64_t value = 0;
  std::vector<double> samples;
  BitOrder order = BitOrder::lsb_first;

  std::size_t length() const noexcept { return samples.size(); }
};

inline std::size_t bit_length(std::uint64_t value) noexcept {
  return value == 0 ? 1 : static_cast<std::size_t>(std::bit_width(value));
}

inline bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

/// Smallest power of two that holds every bit of max_value.
inline std::size_t pad_length(std::uint64_t max_value) noexcept {
  return std::bit_ceil(bit_length(max_value));
}

inline BitSignal encode(std::uint64_t n, std::size_t target_length,
                        BitOrder order = BitOrder::lsb_first) {
  if (!is_power_of_two(target_length)) {
    throw Error(ErrorCode::invalid_length,
                "target length " + std::to_string(target_length) + " is not a power of two");
  }
  if (target_length < 64 && (n >> target_length) != 0) {
    throw Error(ErrorCode::overflowing_value,
                std::to_string(n) + " does not fit in " + std::to_string(target_length) + " bits");
  }

  BitSignal signal{n, std::vector<double>(target_length, 0.0), order};
  for (std::size_t bit = 0; bit < target_length && bit < 64; ++bit) {
    if ((n >> bit) & 1U) {
      const std::size_t index = order == BitOrder::lsb_first ? bit : target_length - 1 - bit;
      signal.samples[index] = 1.0;
    }
  }
  return signal;
}

inline std::uint64_t decode(const std::vector<double>& samples,
                            BitOrder order = BitOrder::lsb_first) {
  const std::size_t length = samples.size();
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < length; ++i) {
    const double s = samples[i];
    if (s != 0.0 && s != 1.0) {
      throw Error(ErrorCode::non_binary_sample,
                  "sample " + std::to_string(i) + " is neither 0 nor 1");
    }
    if (s == 0.0) continue;
    const std::size_t bit = order == BitOrder::lsb_first ? i : length - 1 - i;
    if (bit >= 64) {
      throw Error(ErrorCode::overflowing_value, "set bit beyond 64-bit range");
    }
    value |= std::uint64_t{1} << bit;
  }
  return value;
}

inline std::uint64_t decode(const BitSignal& signal) { return decode(signal.samples, signal.order); }

}  // namespace wavparity
