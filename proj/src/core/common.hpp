#pragma once

// Shared scalar types and small numeric utilities used across the library.

#include <cstdint>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace palsieve {

using u8 = uint8_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;
using u128 = unsigned __int128;
using i128 = __int128;
using cplx = std::complex<double>;

// Width cap for all counting/enumeration entry points.
inline constexpr u64 kMaxWidth = 1000000000000000000ull;  // 10^18

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u128 t = (u128)a + b;
    return u64(t >= m ? t - m : t);
}

u64 powmod(u64 base, u64 exp, u64 mod);

// Floor square root, exact for the full 64-bit range.
u64 isqrt(u64 n);

inline bool is_perfect_square(u64 n, u64* root = nullptr) {
    u64 s = isqrt(n);
    if (root) *root = s;
    return s * s == n;
}

// b^e with overflow detection; throws std::out_of_range past 2^64.
u64 checked_pow(u64 b, u32 e);

// true iff b^e <= limit (no overflow pitfalls).
bool pow_at_most(u64 b, u32 e, u64 limit);

inline i64 floor_mod(i64 a, u64 q) {
    i64 m = a % (i64)q;
    return m < 0 ? m + (i64)q : m;
}

// Compensated accumulator; keeps grid sums accurate to ~1 ulp per term.
struct kahan {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct kahan_cplx {
    kahan re, im;
    void add(cplx z) { re.add(z.real()); im.add(z.imag()); }
    cplx value() const { return {re.sum, im.sum}; }
};

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform, unlike the std distributions.
struct rng64 {
    u64 state;
    explicit rng64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    u64 below(u64 n) { return next() % n; }
};

// Runs fn(task_index) for 0..tasks-1 on `threads` workers. Tasks are
// distributed in contiguous blocks so per-task outputs can be merged in
// index order for schedule-independent results.
void parallel_for(u64 tasks, u32 threads, const std::function<void(u64)>& fn);

// FNV-1a, used for config/grid fingerprints in reports and baselines.
u64 fnv1a(const std::string& s);
std::string hex64(u64 v);

}  // namespace palsieve
