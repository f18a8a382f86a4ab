#pragma once

// Exact enumeration and counting over base-b palindrome families: the block
// Pi_b(L) = palindromes in [b^L, b^(L+1)), the cumulative sets P_b(x),
// P*_b(x) (coprime to b^3-b), P0_b(x) (even floor(log_b n)), arithmetic
// progression slices, and counts of pairs (n, l) with n^2 | l.

#include <functional>
#include <optional>

#include "core/common.hpp"

namespace palsieve {

enum class pal_variant { all, star, even_exp };

// Number of digits is t; the palindrome determined by the half-counter v
// (v in [b^(ceil(t/2)-1), b^(ceil(t/2))), most significant digits of v become
// the leading digits). Strictly increasing in v.
u64 pal_from_half(u64 v, u32 base, u32 num_digits);

// |Pi_b(L)| = (b-1) * b^(ceil((L+1)/2) - 1).
u64 pal_block_size(u32 base, u32 L);

// Ascending stream of Pi_b(L); requires b^(L+1) <= 10^18.
class pal_block_iter {
public:
    pal_block_iter(u32 base, u32 L);
    bool next(u64& out);

private:
    u32 base_, ndigits_;
    u64 v_, v_end_;
};

// Calls fn on every member of Pi_b(L) with half-counter in [v0, v1)
// (absolute half-counter values); used to partition blocks across threads.
void pal_block_segment(u32 base, u32 L, u64 v0, u64 v1, const std::function<void(u64)>& fn);

u64 pal_half_lo(u32 base, u32 L);  // first half-counter value of the block
u64 pal_half_hi(u32 base, u32 L);  // one past the last

// Ascending over all palindromes <= x (every digit length).
void for_each_pal_upto(u32 base, u64 x, const std::function<void(u64)>& fn);

// Exact |{variant set} intersect [1, x]|. `all` and `even_exp` use the
// half-counter closed form; `star` filters gcd(n, b^3-b) = 1 by enumeration.
u64 count_upto(u32 base, u64 x, pal_variant variant);

// |Pi_b(L, q, a)| = #{l in Pi_b(L) : l = a (q), (l,b) = 1}. The coprimality
// filter is part of the definition; pass coprime_to_base = false only for
// oracle comparisons.
u64 count_in_ap(u32 base, u32 L, u64 q, i64 a, bool coprime_to_base = true);

// Per-residue counts of Pi_b(L) mod q in one pass (optionally filtered by
// (l,b)=1), parallelized over half-counter segments.
std::vector<u64> ap_histogram(u32 base, u32 L, u64 q, bool coprime_to_base, u32 threads = 1);

// max_a |Pi_b(L,q,a)| / (|Pi_b(L)|/sqrt(q) + 1): the normalized constant in
// the Banks-Shparlinski progression bound.
double bs_max_ratio(u32 base, u32 L, u64 q, u32 threads = 1);

// #{l in Pi_b(L) : m | l} (no coprimality filter).
u64 count_divisible(u32 base, u32 L, u64 m, u32 threads = 1);

// sum over N/2 < n <= N of #{l in Pi_b(L,q,a) : n^2 | l}. Requires (q,b)=1.
// Strategy: for N^3 >= b^(L+1) scan palindromes and test square divisors;
// otherwise scan multiples of n^2 and test palindromicity.
u64 count_square_pairs(u32 base, u32 L, u64 q, i64 a, u64 N, u32 threads = 1);

// One factorization pass over Pi_b(L,q,a) returning the pair count for every
// dyadic window (N/2, N], N in windows (ascending).
std::vector<u64> square_pair_profile(u32 base, u32 L, u64 q, i64 a,
                                     const std::vector<u64>& windows, u32 threads = 1);

}  // namespace palsieve
