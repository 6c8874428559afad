#include "divsum/int128.hpp"

#include <cmath>

namespace divsum {

std::string to_string(uint128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

std::string to_string(int128 v) {
  if (v < 0) return "-" + to_string(static_cast<uint128>(-(v + 1)) + 1);
  return to_string(static_cast<uint128>(v));
}

uint64_t isqrt64(uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  // correct the floating seed in both directions
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

uint128 isqrt128(uint128 n) {
  if (n <= UINT64_MAX) return isqrt64(static_cast<uint64_t>(n));
  auto r = static_cast<uint128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

}  // namespace divsum
