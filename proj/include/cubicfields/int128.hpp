#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cubicfields {

using i64 = std::int64_t;
using i128 = __int128;

std::string to_string(i128 v);

// Strict decimal parse (optional leading '-'), throws std::invalid_argument on
// malformed input and std::out_of_range on overflow.
i128 parse_i128(std::string_view text);

// Floor square root, n >= 0. Pure integer bit method.
i128 isqrt(i128 n);

// Floor cube root, n >= 0.
i128 icbrt(i128 n);

// Floor fourth root, n >= 0.
i128 iroot4(i128 n);

}  // namespace cubicfields
