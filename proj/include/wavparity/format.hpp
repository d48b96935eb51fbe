#pragma once

#include <cstdio>
#include <string>

namespace wavparity {

/// 17 significant digits, enough for every double to round-trip exactly.
inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace wavparity
