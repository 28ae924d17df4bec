#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simcore {

using i64 = std::int64_t;

// Thrown when a computed value would violate one of the library's own
// mathematical guarantees (exact division, uniqueness assertions, ...).
// Distinct from std::invalid_argument, which flags bad caller input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a requested grid exceeds the configured resource caps.
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// All counting/polynomial arithmetic is exact-or-error: overflow throws,
// it never wraps.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Mathematical mod: result in [0, m) for m > 0.
inline i64 mathmod(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace simcore
