#include "hopset/ackermann.hpp"

#include <algorithm>
#include <cmath>

namespace hopset {

namespace {

using Big = unsigned __int128;

// Every value is clamped to kCap, which exceeds any 64-bit query, so
// comparisons against n <= 2^64 - 1 stay exact.
constexpr Big kCap = static_cast<Big>(1) << 66;

Big pow2(Big e) { return e >= 66 ? kCap : (static_cast<Big>(1) << static_cast<unsigned>(e)); }

Big a_val(unsigned i, Big j) {
    if (i == 0) return std::min<Big>(2 * std::min(j, kCap), kCap);
    if (j == 0) return 1;
    if (i == 1) return pow2(j);  // A(1,j) = 2^j
    Big v = 1;
    // Values grow at least like a tower of twos, so this loop saturates within a few steps.
    for (Big step = 0; step < j; ++step) {
        v = a_val(i - 1, v);
        if (v >= kCap) return kCap;
    }
    return v;
}

Big b_val(unsigned i, Big j) {
    if (i == 0) {
        if (j >= (static_cast<Big>(1) << 34)) return kCap;
        return std::min(j * j, kCap);
    }
    if (j == 0) return 2;
    Big v = 2;
    for (Big step = 0; step < j; ++step) {
        v = b_val(i - 1, v);
        if (v >= kCap) return kCap;
    }
    return v;
}

Weight clamp(Big v) { return v >= static_cast<Big>(kInfinity) ? kInfinity : static_cast<Weight>(v); }

}  // namespace

Weight ackermann_a(unsigned i, std::uint64_t j) { return clamp(a_val(i, j)); }
Weight ackermann_b(unsigned i, std::uint64_t j) { return clamp(b_val(i, j)); }

std::uint64_t lambda(unsigned k, std::uint64_t n) {
    const unsigned i = k / 2;
    const bool odd = k % 2 == 1;
    if (!odd && i == 0) return n / 2 + n % 2;  // min{j : 2j >= n}
    if (odd && i == 0) {
        auto j = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
        while (static_cast<Big>(j) * j < n) ++j;
        while (j > 0 && static_cast<Big>(j - 1) * (j - 1) >= n) --j;
        return j;
    }
    for (std::uint64_t j = 0;; ++j) {
        Big v = odd ? b_val(i, j) : a_val(i, j);
        if (v >= n) return j;
    }
}

std::uint64_t inv_ackermann(std::uint64_t n) {
    for (std::uint64_t j = 0;; ++j)
        if (a_val(static_cast<unsigned>(j), j) >= n) return j;
}

}  // namespace hopset
