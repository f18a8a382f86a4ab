#include "core/common.hpp"

#include <cmath>
#include <thread>

namespace palsieve {

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = (u64)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

u64 checked_pow(u64 b, u32 e) {
    u128 r = 1;
    for (u32 i = 0; i < e; ++i) {
        r *= b;
        if (r > (u128)UINT64_MAX) throw std::out_of_range("checked_pow: overflow");
    }
    return (u64)r;
}

bool pow_at_most(u64 b, u32 e, u64 limit) {
    u128 r = 1;
    for (u32 i = 0; i < e; ++i) {
        r *= b;
        if (r > limit) return false;
    }
    return true;
}

void parallel_for(u64 tasks, u32 threads, const std::function<void(u64)>& fn) {
    if (tasks == 0) return;
    if (threads <= 1 || tasks == 1) {
        for (u64 t = 0; t < tasks; ++t) fn(t);
        return;
    }
    u32 workers = (u32)std::min<u64>(threads, tasks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (u32 w = 0; w < workers; ++w) {
        u64 lo = tasks * w / workers;
        u64 hi = tasks * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (u64 t = lo; t < hi; ++t) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

u64 fnv1a(const std::string& s) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(u64 v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = d[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace palsieve
