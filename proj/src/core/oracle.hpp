#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the fast paths it cross-checks; duplication is the point.

#include "core/common.hpp"

namespace palsieve::oracle {

// Every n <= x whose digit string equals its reverse; string test per n.
std::vector<u64> naive_pal_set(u32 base, u64 x);  // x <= 10^7

// Full trial-division factorization, then check every exponent.
bool naive_squarefree(u64 n);  // n <= 10^9

// Quasi-palindromes at the given level in [b^L, b^(L+1)) with last digit
// coprime to b; digit test per n.
std::vector<u64> naive_quasi_set(u32 base, u32 L, u32 level);  // b^(L+1) <= 10^9

// Counts only (one block scan serving every level at once): result[lv-1] is
// the cardinality at level lv for 1 <= lv <= max_level.
std::vector<u64> naive_quasi_counts(u32 base, u32 L, u32 max_level, u32 threads = 1);

struct inequality_check {
    double lhs, rhs;
    bool holds;
};

// |sum z_n|^2 <= (N+H-1)/H * sum_{|h|<H} (1-|h|/H) sum_n z_{n+h} conj(z_n).
// The right side is real up to roundoff; its imaginary part must stay below
// the tolerance folded into `holds`.
inequality_check vdc_check(const std::vector<cplx>& z, u64 H);

struct cong_bound_result {
    u64 lhs;           // sum_m max_a #{n <= N : m n = a (q)}
    u64 rhs_num;       // M N tau(q) + M q tau(q), over denominator q
    bool holds;        // exact rational comparison
    double rhs_value;  // MN tau(q)/q + M tau(q)
};
cong_bound_result cong_bound_check(u64 M, u64 N, u64 q);  // M,N,q <= 10^4

// Quadrature of phi_big^(2K) over [0,1] by equispaced panel doubling until
// the relative change is below 1e-6 (throws std::runtime_error after 24
// doublings). panels = 0 selects a density of 4K b^(2N) start points.
double quad_moment(u32 base, u32 N, u32 K, u64 panels = 0);

// Literal double loop for the square-pair count over Pi_b(L,q,a).
u64 naive_square_pair_count(u32 base, u32 L, u64 q, i64 a, u64 N);  // b^(L+1) <= 10^7

// Direct evaluation of the square-moduli quadratic form (per-h summation).
double naive_ls_quadratic_form(const std::vector<cplx>& gamma, u64 D, u64 q);

// Ramanujan sum by direct complex summation over units.
cplx naive_ramanujan_c(u64 q, i64 n);

}  // namespace palsieve::oracle
