#pragma once

namespace monopolies {

// Division with mathematical rounding (toward -infinity / +infinity), not
// C++ truncation. Needed because thresholds like ceil((delta + 2k) / 2) are
// evaluated for negative k as well.
constexpr long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

constexpr long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

} // namespace monopolies
