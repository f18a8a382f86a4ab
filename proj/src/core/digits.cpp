#include "core/digits.hpp"

#include <algorithm>
#include <numeric>

namespace palsieve {

static void check_base(u32 base) {
    if (base < 2) throw std::domain_error("digits: base must be >= 2");
}

digit_vector digits_of(u64 n, u32 base, std::optional<size_t> length) {
    check_base(base);
    digit_vector dv;
    dv.base = base;
    u64 m = n;
    do {
        dv.digits.push_back(u32(m % base));
        m /= base;
    } while (m);
    if (length) {
        if (dv.digits.size() > *length)
            throw std::out_of_range("digits_of: length too small for value");
        dv.digits.resize(*length, 0);
    }
    return dv;
}

u64 value_of(const digit_vector& dv) {
    check_base(dv.base);
    u128 v = 0, p = 1;
    for (u32 d : dv.digits) {
        if (d >= dv.base) throw std::domain_error("value_of: digit out of range");
        v += (u128)d * p;
        if (v > (u128)UINT64_MAX) throw std::out_of_range("value_of: overflow");
        p *= dv.base;
    }
    return (u64)v;
}

u32 digit_count(u64 n, u32 base) {
    check_base(base);
    u32 c = 0;
    do {
        ++c;
        n /= base;
    } while (n);
    return c;
}

u64 reverse_digits(u64 n, u32 base, u32 L) {
    check_base(base);
    if (!pow_at_most(base, L + 1, kMaxWidth))
        throw std::out_of_range("reverse_digits: b^(L+1) exceeds width cap");
    u64 window = checked_pow(base, L + 1);
    if (n >= window) throw std::out_of_range("reverse_digits: n outside [0, b^(L+1))");
    u64 r = 0;
    for (u32 j = 0; j <= L; ++j) {
        r = r * base + n % base;
        n /= base;
    }
    return r;
}

bool is_palindrome(u64 n, u32 base) {
    check_base(base);
    if (n == 0) return false;  // palindrome sets contain natural numbers only
    u32 buf[64];
    u32 len = 0;
    while (n) {
        buf[len++] = u32(n % base);
        n /= base;
    }
    for (u32 i = 0, j = len - 1; i < j; ++i, --j)
        if (buf[i] != buf[j]) return false;
    return true;
}

bool is_quasi_palindrome(u64 n, u32 base, u32 level) {
    check_base(base);
    if (n == 0 || level == 0) throw std::domain_error("is_quasi_palindrome: n, level >= 1");
    u32 buf[64];
    u32 len = 0;
    while (n) {
        buf[len++] = u32(n % base);
        n /= base;
    }
    // d_j vs d_(D-j) with D = len-1; out-of-range indices are zero digits
    for (u32 j = 0; j < level; ++j) {
        u32 lo = j < len ? buf[j] : 0;
        u32 hi = j < len ? buf[len - 1 - j] : 0;
        if (lo != hi) return false;
    }
    return true;
}

quasi_skeleton gen_quasi_skeleton(u32 base, u32 L, u32 level) {
    check_base(base);
    if (level < 1 || 2 * level > L)
        throw std::out_of_range("quasi_skeleton: need 1 <= level <= L/2");
    if (!pow_at_most(base, L, kMaxWidth))
        throw std::out_of_range("quasi_skeleton: b^L exceeds width cap");

    u64 count = 0;
    for (u32 k = 1; k < base; ++k)
        if (std::gcd(k, base) == 1) ++count;  // phi restricted to leading digit
    for (u32 j = 1; j < level; ++j) {
        count *= base;
        if (count > 100000000ull)
            throw std::out_of_range("quasi_skeleton: member count too large");
    }

    std::vector<u64> weights(level);
    for (u32 j = 0; j < level; ++j)
        weights[j] = checked_pow(base, j) + checked_pow(base, L - j);

    quasi_skeleton sk;
    sk.base = base;
    sk.block_exp = L;
    sk.level = level;
    sk.members.reserve(count);
    // odometer over (k_0, ..., k_{level-1})
    std::vector<u32> k(level, 0);
    k[0] = 1;
    for (;;) {
        if (std::gcd(k[0], base) == 1) {
            u64 a = 0;
            for (u32 j = 0; j < level; ++j) a += weights[j] * k[j];
            sk.members.push_back(a);
        }
        u32 j = 0;
        for (; j < level; ++j) {
            if (++k[j] < base) break;
            k[j] = 0;
        }
        if (j == level) break;
    }
    std::sort(sk.members.begin(), sk.members.end());
    return sk;
}

quasi_cover_iter::quasi_cover_iter(u32 base, u32 L, u32 level)
    : skeleton_(gen_quasi_skeleton(base, L, level)) {
    step_ = checked_pow(base, level);
    // b*X/q^2 = b^(L+1-2*level)
    m_count_ = checked_pow(base, L + 1 - 2 * level);
}

bool quasi_cover_iter::next(quasi_cover_triple& out) {
    if (a_idx_ >= skeleton_.members.size()) return false;
    out.skeleton = skeleton_.members[a_idx_];
    out.offset = m_;
    out.value = out.skeleton + step_ * m_;
    if (++m_ == m_count_) {
        m_ = 0;
        ++a_idx_;
    }
    return true;
}

}  // namespace palsieve
