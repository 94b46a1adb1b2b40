#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copairs {

using u128 = unsigned __int128;
using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("128-bit addition overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("128-bit subtraction overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit multiplication overflow");
    return r;
}

// base^exp with overflow detection; exp small (tuple arities, omega values).
inline i128 checked_pow(i128 base, unsigned exp) {
    i128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline std::string to_decimal(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline std::string to_decimal(i128 v) {
    if (v < 0) return "-" + to_decimal(static_cast<u128>(-v));
    return to_decimal(static_cast<u128>(v));
}

// Exact for values below 2^64; above that the nearest double is fine for
// error analysis, which is the only consumer of this conversion.
inline double to_double(u128 v) {
    return static_cast<double>(v);
}

}  // namespace copairs
