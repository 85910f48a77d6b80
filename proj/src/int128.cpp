#include "cubicfields/int128.hpp"

#include <stdexcept>

namespace cubicfields {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

i128 parse_i128(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = false;
  size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  unsigned __int128 acc = 0;
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 127;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("non-digit in integer literal");
    unsigned d = static_cast<unsigned>(ch - '0');
    if (acc > (limit - d) / 10) throw std::out_of_range("integer literal exceeds 128 bits");
    acc = acc * 10 + d;
  }
  if (neg) {
    if (acc > limit) throw std::out_of_range("integer literal exceeds 128 bits");
    return static_cast<i128>(-acc);
  }
  if (acc >= limit) throw std::out_of_range("integer literal exceeds 128 bits");
  return static_cast<i128>(acc);
}

i128 isqrt(i128 n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n < 2) return n;
  i128 rem = n, root = 0;
  i128 bit = i128(1) << 124;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (rem >= root + bit) {
      rem -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

namespace {
// m^3 <= n without overflow: m^3 <= n  <=>  m^2 <= floor(n/m) for m > 0.
bool cube_at_most(i128 m, i128 n) {
  if (m <= 0) return true;
  return m * m <= n / m;
}
}  // namespace

i128 icbrt(i128 n) {
  if (n < 0) throw std::domain_error("icbrt of negative value");
  i128 lo = 0, hi = (i128(1) << 43);
  while (lo < hi) {
    i128 mid = lo + (hi - lo + 1) / 2;
    if (cube_at_most(mid, n))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

i128 iroot4(i128 n) {
  return isqrt(isqrt(n));
}

}  // namespace cubicfields
