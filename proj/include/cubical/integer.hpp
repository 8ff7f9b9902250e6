#pragma once

#include <cstdint>
#include <string>

#include "cubical/errors.hpp"

namespace cubical {

/// Exact integer used for every face count and enumerative invariant.
/// All arithmetic on it goes through the checked helpers below.
using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b)
{
    Int r{};
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline Int sub(Int a, Int b)
{
    Int r{};
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline Int mul(Int a, Int b)
{
    Int r{};
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// base^exp for exp >= 0.
inline Int pow(Int base, int exp)
{
    Int r = 1;
    for (int i = 0; i < exp; ++i) {
        r = mul(r, base);
    }
    return r;
}

inline Int pow2(int exp)
{
    if (exp < 0 || exp > 62) {
        throw OverflowError("2^" + std::to_string(exp) + " out of range");
    }
    return Int{1} << exp;
}

/// (-1)^exp for any integer exponent.
constexpr Int sign(int exp) { return (exp % 2 == 0) ? 1 : -1; }

} // namespace checked

/// Binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0).
/// Negative n is not needed anywhere and is rejected.
inline Int binomial(Int n, Int k)
{
    if (n < 0) {
        throw InvalidArgument("binomial with negative n");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Int r = 1;
    for (Int j = 1; j <= k; ++j) {
        // r * (n - k + j) is divisible by j at every step
        r = checked::mul(r, n - k + j) / j;
    }
    return r;
}

} // namespace cubical
