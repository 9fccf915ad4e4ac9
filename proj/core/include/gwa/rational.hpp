#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gwa/error.hpp"

namespace gwa {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced, positive denominator), so equality is plain comparison.
using Rational = mpq_class;

inline Rational rational_pow(const Rational& base, std::int64_t exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw DivisionByZeroError("0 cannot be raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    std::uint64_t e;
    if (exp < 0) {
        b = Rational(1) / b;
        e = static_cast<std::uint64_t>(-(exp + 1)) + 1;
    } else {
        e = static_cast<std::uint64_t>(exp);
    }
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Checked exponent arithmetic: overflow is a hard error, never wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent addition overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent multiplication overflow");
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw OverflowError("exponent negation overflow");
    return -a;
}

}  // namespace gwa
