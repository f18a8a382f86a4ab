#pragma once

// Digit harmonics: the single-digit character sum magnitude
//   phi_little(alpha, b) = |sum_{0<=m<b} e(alpha m)|,
// the mirrored-weight product
//   phi_big(alpha, b, N) = prod_{1<=n<N} phi_little(alpha (b^n + b^(2N-n)), b)
// (1 when N <= 1), the inequalities linking them to palindrome exponential
// sums, the exact even moment of phi_big as a lattice-point count, and the
// unit-class shift identity.

#include "core/common.hpp"

namespace palsieve {

double phi_little(double alpha, u32 base);

double phi_big(double alpha, u32 base, u32 N);

// phi_big at alpha = num/den + beta with the rational part reduced in exact
// integer arithmetic before leaving the unit circle.
double phi_big_at_fraction(u64 num, u64 den, double beta, u32 base, u32 N);

struct bound_check {
    double lhs, rhs;
    bool holds;
};

// |sum_{n in Pi_b(2N)} e(alpha n)| <= b^2 * phi_big(alpha, b, N); lhs by
// direct enumeration. Requires b^(2N+1) <= 10^12.
bound_check pal_exp_sum_check(double alpha, u32 base, u32 N);

// |sum over P0_b(x) of e(alpha n)| <= b^2 sum_{0<=N<=log_b(x)/2} sum_{M<=N}
// phi_big(alpha b^(N-M), b, M). Requires x <= 10^9.
bound_check incomplete_sum_check(double alpha, u32 base, u64 x);

// Exact integral of phi_big^(2K) over [0,1]: the number of 2K-tuples of digit
// vectors whose weighted differences sum to zero, counted by convolution.
// Requires K >= 1 and the budget K*(N-1)*(base-1) <= 64.
u64 phi_moment_exact(u32 base, u32 N, u32 K);

struct shift_check {
    double lhs, rhs;
    double tolerance;
    bool agree;
};

// sum over units h mod q of prod_{M<n<N} phi_little^delta((h/q + beta) w_n)
// equals sum over units of phi_big^delta(h/q + b^M beta, N-M). Needs (q,b)=1.
shift_check algebraic_shift_check(u64 q, u32 base, double beta, u32 M, u32 N, double delta);

}  // namespace palsieve
