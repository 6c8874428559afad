#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// 128-bit helpers. All intermediate products in the library go through the
// checked_* functions below; overflow is an error, never wraparound.

namespace divsum {

using int128 = __int128;
using uint128 = unsigned __int128;

std::string to_string(int128 v);
std::string to_string(uint128 v);

// floor(sqrt(n)), exact for the full width
uint64_t isqrt64(uint64_t n);
uint128 isqrt128(uint128 n);

inline int128 isqrt(int128 n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return static_cast<int128>(isqrt128(static_cast<uint128>(n)));
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int128 addition overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int128 multiplication overflow");
  return r;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

}  // namespace divsum
