#pragma once

// Integer scalars used throughout: 64-bit for user-facing values, 128-bit for
// the enumeration hot path, boost cpp_int when 128 bits cannot be certified.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace qf {

using Int = std::int64_t;
using Int128 = __int128;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(Int v) { return std::to_string(v); }

inline Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

// Floor division toward minus infinity.
inline Int128 floor_div(Int128 a, Int128 b) {
    Int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int128 ceil_div(Int128 a, Int128 b) {
    Int128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Exact floor square root of a nonnegative value.
inline Int128 isqrt(Int128 v) {
    if (v < 0) return -1;
    if (v == 0) return 0;
    auto est = static_cast<Int128>(__builtin_sqrtl(static_cast<long double>(v)));
    while (est > 0 && est * est > v) --est;
    while ((est + 1) * (est + 1) <= v) ++est;
    return est;
}

inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

inline bool fits_int128(const BigInt& v) {
    static const BigInt bound = BigInt(1) << 126;  // generous safety margin
    return v > -bound && v < bound;
}

inline Int128 to_int128(const BigInt& v) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    Int128 lo = static_cast<std::uint64_t>(a & 0xFFFFFFFFFFFFFFFFULL);
    Int128 hi = static_cast<std::uint64_t>((a >> 64) & 0xFFFFFFFFFFFFFFFFULL);
    Int128 r = (hi << 64) | lo;
    return v < 0 ? -r : r;
}

inline BigInt to_bigint(Int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u & 0xFFFFFFFFFFFFFFFFULL);
    return neg ? BigInt(-r) : r;
}

}  // namespace qf
