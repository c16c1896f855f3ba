#pragma once

#include <charconv>
#include <string>

namespace fracmax {

/// Locale-independent decimal rendering with 17 significant digits, enough
/// to round-trip any double exactly.
inline std::string to_full_precision(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace fracmax
