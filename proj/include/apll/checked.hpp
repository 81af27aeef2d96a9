#pragma once

#include <cstdint>
#include <stdexcept>

namespace apll {

// All coefficient arithmetic in this library is exact int64 with loud
// overflow detection; nothing is allowed to wrap silently.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

// a*b + c, the multiply-accumulate step of ring convolution
inline std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
    return checked_add(checked_mul(a, b), c);
}

}  // namespace apll
