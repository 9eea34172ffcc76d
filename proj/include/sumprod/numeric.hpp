#pragma once

#include <cstdint>
#include <string>

namespace sumprod {

#if !defined(__SIZEOF_INT128__)
#error "sumprod requires compiler support for unsigned __int128 (GCC/Clang)."
#endif

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline std::string to_string(u128 x) {
    if (x == 0) return "0";
    char buf[40];
    int pos = 40;
    while (x > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(x % 10));
        x /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

inline constexpr u128 sq(u128 x) { return x * x; }

/// x^e without overflow checks; callers keep operands inside 128 bits.
inline constexpr u128 ipow(u128 x, unsigned e) {
    u128 r = 1;
    while (e--) r *= x;
    return r;
}

/// Exact comparison of a/b vs c/d (b, d > 0) by the continued-fraction
/// descent; never overflows regardless of operand magnitude.
/// Returns -1, 0, or +1.
inline int compare_fractions(u128 a, u128 b, u128 c, u128 d) {
    for (;;) {
        u128 qa = a / b, qc = c / d;
        if (qa != qc) return qa < qc ? -1 : 1;
        a -= qa * b;
        c -= qc * d;
        if (a == 0 && c == 0) return 0;
        if (a == 0) return -1;
        if (c == 0) return 1;
        // compare a/b vs c/d with a<b, c<d: flip to b/a vs d/c, reversed
        u128 ta = a, tc = c;
        a = b; b = ta;
        c = d; d = tc;
        { u128 t = a; a = c; c = t; }
        { u128 t = b; b = d; d = t; }
    }
}

} // namespace sumprod
