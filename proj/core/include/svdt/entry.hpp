#pragma once

#include <string>

namespace svdt::entry {

// Marked alphabet 1' < 1 < 2' < 2 < ...  encoded as integers so that the
// marked order is plain integer order: k' -> 2k-1, k -> 2k.
constexpr int unprimed(int k) { return 2 * k; }
constexpr int primed(int k) { return 2 * k - 1; }
constexpr bool is_primed(int code) { return code % 2 == 1; }
constexpr int value(int code) { return (code + 1) / 2; }

inline std::string to_string(int code) {
  std::string s = std::to_string(value(code));
  if (is_primed(code)) s += '\'';
  return s;
}

}  // namespace svdt::entry
