#pragma once

#include <cstdint>

#include "antirec/error.hpp"

namespace antirec::checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw RangeError("64-bit overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw RangeError("64-bit overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw RangeError("64-bit overflow in multiplication");
    return r;
}

}  // namespace antirec::checked
