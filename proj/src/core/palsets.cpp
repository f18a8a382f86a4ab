#include "core/palsets.hpp"

#include <algorithm>
#include <numeric>

#include "core/arith.hpp"
#include "core/digits.hpp"

namespace palsieve {

static u64 reverse_fixed(u64 w, u32 base, u32 k) {
    u64 r = 0;
    for (u32 i = 0; i < k; ++i) {
        r = r * base + w % base;
        w /= base;
    }
    return r;
}

u64 pal_from_half(u64 v, u32 base, u32 num_digits) {
    u32 h = (num_digits + 1) / 2;
    if (num_digits % 2 == 0) return v * checked_pow(base, h) + reverse_fixed(v, base, h);
    return v * checked_pow(base, h - 1) + reverse_fixed(v / base, base, h - 1);
}

u64 pal_block_size(u32 base, u32 L) {
    return (u64)(base - 1) * checked_pow(base, (L + 2) / 2 - 1);
}

u64 pal_half_lo(u32 base, u32 L) { return checked_pow(base, (L + 2) / 2 - 1); }
u64 pal_half_hi(u32 base, u32 L) { return checked_pow(base, (L + 2) / 2); }

static void check_block(u32 base, u32 L) {
    if (base < 2) throw std::domain_error("palsets: base must be >= 2");
    if (!pow_at_most(base, L + 1, kMaxWidth))
        throw std::out_of_range("palsets: b^(L+1) exceeds width cap");
}

pal_block_iter::pal_block_iter(u32 base, u32 L) : base_(base), ndigits_(L + 1) {
    check_block(base, L);
    v_ = pal_half_lo(base, L);
    v_end_ = pal_half_hi(base, L);
}

bool pal_block_iter::next(u64& out) {
    if (v_ >= v_end_) return false;
    out = pal_from_half(v_++, base_, ndigits_);
    return true;
}

void pal_block_segment(u32 base, u32 L, u64 v0, u64 v1, const std::function<void(u64)>& fn) {
    for (u64 v = v0; v < v1; ++v) fn(pal_from_half(v, base, L + 1));
}

void for_each_pal_upto(u32 base, u64 x, const std::function<void(u64)>& fn) {
    if (base < 2) throw std::domain_error("palsets: base must be >= 2");
    if (x > kMaxWidth) throw std::out_of_range("palsets: x exceeds width cap");
    for (u32 t = 1;; ++t) {
        if (!pow_at_most(base, t - 1, x)) break;  // b^(t-1) > x: no t-digit values left
        u64 vlo = checked_pow(base, (t + 1) / 2 - 1);
        u64 vhi = vlo * base;
        for (u64 v = vlo; v < vhi; ++v) {
            u64 p = pal_from_half(v, base, t);
            if (p > x) break;
            fn(p);
        }
    }
}

u64 count_upto(u32 base, u64 x, pal_variant variant) {
    if (base < 2) throw std::domain_error("palsets: base must be >= 2");
    if (x > kMaxWidth) throw std::out_of_range("palsets: x exceeds width cap");
    if (x == 0) return 0;
    if (variant == pal_variant::star) {
        u64 mb = (u64)base * base * base - base;
        u64 count = 0;
        for_each_pal_upto(base, x, [&](u64 p) {
            if (std::gcd(p, mb) == 1) ++count;
        });
        return count;
    }
    u64 total = 0;
    for (u32 t = 1;; ++t) {
        if (!pow_at_most(base, t - 1, x)) break;
        if (variant == pal_variant::even_exp && t % 2 == 0) continue;
        u32 h = (t + 1) / 2;
        u64 vlo = checked_pow(base, h - 1);
        u64 blocksize = vlo * (base - 1);
        if (pow_at_most(base, t, x + 1)) {  // b^t - 1 <= x: whole block
            total += blocksize;
            continue;
        }
        // partial block: half-counters v with pal(v) <= x
        u64 shift = checked_pow(base, t - h);
        u64 vx = x / shift;  // top h digits of x
        total += vx - vlo + (pal_from_half(vx, base, t) <= x ? 1 : 0);
    }
    return total;
}

u64 count_in_ap(u32 base, u32 L, u64 q, i64 a, bool coprime_to_base) {
    check_block(base, L);
    if (q == 0) throw std::domain_error("count_in_ap: q >= 1");
    u64 res = (u64)floor_mod(a, q);
    u64 count = 0;
    pal_block_iter it(base, L);
    for (u64 p; it.next(p);) {
        if (p % q != res) continue;
        if (coprime_to_base && std::gcd(p, (u64)base) != 1) continue;
        ++count;
    }
    return count;
}

std::vector<u64> ap_histogram(u32 base, u32 L, u64 q, bool coprime_to_base, u32 threads) {
    check_block(base, L);
    if (q == 0) throw std::domain_error("ap_histogram: q >= 1");
    u64 vlo = pal_half_lo(base, L), vhi = pal_half_hi(base, L);
    u64 span = vhi - vlo;
    u32 tasks = threads > 1 ? threads * 4 : 1;
    std::vector<std::vector<u64>> partial(tasks, std::vector<u64>(q, 0));
    parallel_for(tasks, threads, [&](u64 t) {
        u64 a0 = vlo + span * t / tasks;
        u64 a1 = vlo + span * (t + 1) / tasks;
        auto& hist = partial[t];
        pal_block_segment(base, L, a0, a1, [&](u64 p) {
            if (coprime_to_base && std::gcd(p, (u64)base) != 1) return;
            ++hist[p % q];
        });
    });
    std::vector<u64> hist(q, 0);
    for (auto& part : partial)
        for (u64 r = 0; r < q; ++r) hist[r] += part[r];
    return hist;
}

double bs_max_ratio(u32 base, u32 L, u64 q, u32 threads) {
    auto hist = ap_histogram(base, L, q, true, threads);
    u64 best = *std::max_element(hist.begin(), hist.end());
    double denom = (double)pal_block_size(base, L) / std::sqrt((double)q) + 1.0;
    return (double)best / denom;
}

u64 count_divisible(u32 base, u32 L, u64 m, u32 threads) {
    check_block(base, L);
    if (m == 0) throw std::domain_error("count_divisible: m >= 1");
    if (m == 1) return pal_block_size(base, L);
    u64 vlo = pal_half_lo(base, L), vhi = pal_half_hi(base, L);
    u64 span = vhi - vlo;
    u32 tasks = threads > 1 ? threads * 4 : 1;
    std::vector<u64> partial(tasks, 0);
    parallel_for(tasks, threads, [&](u64 t) {
        u64 a0 = vlo + span * t / tasks;
        u64 a1 = vlo + span * (t + 1) / tasks;
        u64 c = 0;
        pal_block_segment(base, L, a0, a1, [&](u64 p) { c += (p % m == 0); });
        partial[t] = c;
    });
    u64 total = 0;
    for (u64 c : partial) total += c;
    return total;
}

// Count divisors of s in (lo, hi].
static u64 divisors_in_window(u64 s, u64 lo, u64 hi) {
    if (s <= lo) return 0;
    u64 count = 0;
    for (u64 d : divisors(factorize(s)))
        if (d > lo && d <= hi) ++count;
    return count;
}

u64 count_square_pairs(u32 base, u32 L, u64 q, i64 a, u64 N, u32 threads) {
    check_block(base, L);
    if (q == 0 || N == 0) throw std::domain_error("count_square_pairs: q, N >= 1");
    if (std::gcd(q, (u64)base) != 1)
        throw std::domain_error("count_square_pairs: need (q, b) = 1");
    u64 block_hi = checked_pow(base, L + 1);
    u64 n_lo = N / 2, n_hi = N;  // window (n_lo, n_hi]
    if ((u128)(n_lo + 1) * (n_lo + 1) >= block_hi) return 0;
    u64 res = (u64)floor_mod(a, q);

    if ((u128)N * N * N >= block_hi) {
        // scan palindromes; few n-candidates per l via its square part
        u64 vlo = pal_half_lo(base, L), vhi = pal_half_hi(base, L);
        u64 span = vhi - vlo;
        u32 tasks = threads > 1 ? threads * 4 : 1;
        std::vector<u64> partial(tasks, 0);
        parallel_for(tasks, threads, [&](u64 t) {
            u64 a0 = vlo + span * t / tasks;
            u64 a1 = vlo + span * (t + 1) / tasks;
            u64 c = 0;
            pal_block_segment(base, L, a0, a1, [&](u64 p) {
                if (p % q != res || std::gcd(p, (u64)base) != 1) return;
                if (n_hi - n_lo <= 32) {
                    for (u64 n = n_lo + 1; n <= n_hi; ++n)
                        if ((u128)n * n <= p && p % (n * n) == 0) ++c;
                } else {
                    c += divisors_in_window(square_part(p), n_lo, n_hi);
                }
            });
            partial[t] = c;
        });
        u64 total = 0;
        for (u64 c : partial) total += c;
        return total;
    }

    // scan multiples of n^2 inside the block
    u64 block_lo = block_hi / base;
    u64 total = 0;
    for (u64 n = n_lo + 1; n <= n_hi; ++n) {
        u64 n2 = n * n;
        if (n2 >= block_hi) break;
        for (u64 l = (block_lo + n2 - 1) / n2 * n2; l < block_hi; l += n2) {
            if (l % q != res) continue;
            if (std::gcd(l, (u64)base) != 1) continue;
            if (is_palindrome(l, base)) ++total;
        }
    }
    return total;
}

std::vector<u64> square_pair_profile(u32 base, u32 L, u64 q, i64 a,
                                     const std::vector<u64>& windows, u32 threads) {
    check_block(base, L);
    if (q == 0) throw std::domain_error("square_pair_profile: q >= 1");
    if (std::gcd(q, (u64)base) != 1)
        throw std::domain_error("square_pair_profile: need (q, b) = 1");
    if (!std::is_sorted(windows.begin(), windows.end()))
        throw std::invalid_argument("square_pair_profile: windows must ascend");
    u64 res = (u64)floor_mod(a, q);
    u64 vlo = pal_half_lo(base, L), vhi = pal_half_hi(base, L);
    u64 span = vhi - vlo;
    u32 tasks = threads > 1 ? threads * 8 : 1;
    std::vector<std::vector<u64>> partial(tasks, std::vector<u64>(windows.size(), 0));
    parallel_for(tasks, threads, [&](u64 t) {
        u64 a0 = vlo + span * t / tasks;
        u64 a1 = vlo + span * (t + 1) / tasks;
        auto& counts = partial[t];
        pal_block_segment(base, L, a0, a1, [&](u64 p) {
            if (p % q != res || std::gcd(p, (u64)base) != 1) return;
            u64 s = square_part(p);
            if (s == 1) {
                for (size_t i = 0; i < windows.size(); ++i)
                    if (windows[i] / 2 < 1 && 1 <= windows[i]) ++counts[i];
                return;
            }
            for (u64 d : divisors(factorize(s))) {
                for (size_t i = 0; i < windows.size(); ++i)
                    if (windows[i] / 2 < d && d <= windows[i]) ++counts[i];
            }
        });
    });
    std::vector<u64> out(windows.size(), 0);
    for (auto& part : partial)
        for (size_t i = 0; i < out.size(); ++i) out[i] += part[i];
    return out;
}

}  // namespace palsieve
