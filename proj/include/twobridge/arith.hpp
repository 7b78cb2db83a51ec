#pragma once

#include <cstdint>
#include <utility>

#include "errors.hpp"

namespace twobridge {

using integer = std::int64_t;

inline integer checked_add(integer a, integer b) {
    integer out;
    if (__builtin_add_overflow(a, b, &out))
        fail(errc::overflow, "integer overflow in addition");
    return out;
}

inline integer checked_mul(integer a, integer b) {
    integer out;
    if (__builtin_mul_overflow(a, b, &out))
        fail(errc::overflow, "integer overflow in multiplication");
    return out;
}

inline integer checked_abs(integer a) {
    if (a >= 0) return a;
    integer out;
    if (__builtin_sub_overflow(integer{0}, a, &out))
        fail(errc::overflow, "integer overflow in absolute value");
    return out;
}

// Least nonnegative residue of a modulo m, m > 0; correct for negative a.
inline integer floor_mod(integer a, integer m) {
    integer r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m via the extended Euclidean algorithm.
// Requires gcd(a, m) = 1 and m >= 1.
inline integer mod_inverse(integer a, integer m) {
    integer r0 = m, r1 = floor_mod(a, m);
    integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        integer q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    return floor_mod(t0, m);
}

}  // namespace twobridge
