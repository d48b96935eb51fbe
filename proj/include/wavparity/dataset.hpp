#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace wavparity {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline Parity parity_of(std::uint64_t n) noexcept { return (n & 1U) ? Parity::odd : Parity::even; }

struct Dataset {
  std::vector<std::uint64_t> integers;
  std::vector<Parity> labels;
};

/// Every integer in [range_start, range_end], ascending, with ground-truth parity.
inline Dataset make_dataset(std::uint64_t range_start, std::uint64_t range_end) {
  if (range_start > range_end) {
    throw Error(ErrorCode::invalid_range,
                std::to_string(range_start) + " > " + std::to_string(range_end));
  }
  Dataset out;
  const auto count = range_end - range_start + 1;
  out.integers.reserve(count);
  out.labels.reserve(count);
  for (std::uint64_t n = range_start;; ++n) {
    out.integers.push_back(n);
    out.labels.push_back(parity_of(n));
    if (n == range_end) break;
  }
  return out;
}

}  // namespace wavparity
