#pragma once

#include <charconv>
#include <string>

namespace bops {

// Shortest decimal string that parses back to exactly the same double; keeps
// CSV/JSON output byte-stable across runs and platforms.
inline std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace bops
