#pragma once

// Base-b digit arithmetic: expansions, the digit-reversal map on a fixed
// window of L+1 digits, palindrome and quasi-palindrome predicates, and the
// level-lambda quasi-palindrome skeleton whose translates cover a block.

#include <optional>

#include "core/common.hpp"

namespace palsieve {

struct digit_vector {
    u32 base = 10;
    std::vector<u32> digits;  // little-endian: digits[j] is the coefficient of base^j

    size_t length() const { return digits.size(); }
};

// Little-endian expansion of n. With `length` given, pads with leading zeros
// (throws std::out_of_range if n needs more digits); otherwise minimal length
// (n = 0 yields the single digit 0).
digit_vector digits_of(u64 n, u32 base, std::optional<size_t> length = std::nullopt);

u64 value_of(const digit_vector& dv);

// j-th base-b digit of n; 0 for j past the top.
inline u32 digit_at(u64 n, u32 base, u32 j) {
    for (u32 i = 0; i < j && n; ++i) n /= base;
    return u32(n % base);
}

// Number of base-b digits of n >= 1 (floor(log_b n) + 1).
u32 digit_count(u64 n, u32 base);

// Reverses the first L+1 digits: n = sum d_j b^j  ->  sum d_j b^(L-j).
// Domain [0, b^(L+1)); an involution and a bijection on that window.
u64 reverse_digits(u64 n, u32 base, u32 L);

bool is_palindrome(u64 n, u32 base);

// Outer digit symmetry only: d_j(n) = d_(D-j)(n) for 0 <= j < level, where
// D = floor(log_b n). Indices past the expansion count as zero digits, so
// every palindrome is a quasi-palindrome at every level.
bool is_quasi_palindrome(u64 n, u32 base, u32 level);

struct quasi_skeleton {
    u32 base = 10;
    u32 block_exp = 0;  // L
    u32 level = 1;      // lambda
    std::vector<u64> members;  // ascending; phi(base)*base^(level-1) of them
};

// Skeleton values a = sum_{0<=j<level} (b^j + b^(L-j)) k_j with digits
// 0 <= k_j < b and (k_0, b) = 1. Requires 1 <= level <= L/2.
quasi_skeleton gen_quasi_skeleton(u32 base, u32 L, u32 level);

struct quasi_cover_triple {
    u64 skeleton = 0;  // a
    u64 offset = 0;    // m
    u64 value = 0;     // a + b^level * m
};

// Streams all (a, m, l) with a in the skeleton and 0 <= m < b^(L+1-2*level).
// The emitted l exhaust exactly the integers in [b^L, b^(L+1)) whose first
// `level` digits mirror their last `level` and whose last digit is coprime
// to the base. Emission is ordered by (a, m).
class quasi_cover_iter {
public:
    quasi_cover_iter(u32 base, u32 L, u32 level);
    bool next(quasi_cover_triple& out);
    u64 total() const { return (u64)skeleton_.members.size() * m_count_; }

private:
    quasi_skeleton skeleton_;
    u64 m_count_ = 0;
    u64 step_ = 0;  // b^level
    size_t a_idx_ = 0;
    u64 m_ = 0;
};

}  // namespace palsieve
