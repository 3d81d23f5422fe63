#pragma once

#include <string>
#include <string_view>

#include "synchq/errors.hpp"

namespace synchq {

/// Coefficient type for all exact arithmetic. 128 bits is enough for the
/// intended parameter range (Gauss coefficient sums up to roughly C(81,40)
/// ~ 2.4e23, far below the ~1.7e38 limit); every operation is checked and
/// throws arithmetic_overflow instead of wrapping.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow("coefficient addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_overflow("coefficient subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow("coefficient multiplication overflow");
    return r;
}

inline int128 checked_neg(int128 a) {
    return checked_sub(0, a);
}

/// Decimal rendering; JSON carries coefficients as strings because they
/// do not fit 64-bit JSON numbers.
std::string int128_to_string(int128 v);

/// Parses an optionally signed decimal string. Throws std::invalid_argument
/// on malformed text and arithmetic_overflow when the value exceeds the
/// 128-bit range.
int128 int128_from_string(std::string_view s);

} // namespace synchq
