#pragma once

// Complete modular character sums evaluated in double precision with
// compensated accumulation: the coprime Gauss sum G*(a;q), the quadratic
// Kloosterman sum K2(c,d;q), the Kummer-type sum Ku2(c,d;s), plus the
// structural identities they satisfy (CRT splitting, the Salie reduction for
// square moduli, correlation identities via Ramanujan sums) and incomplete
// twisted sums.

#include "core/common.hpp"

namespace palsieve {

inline constexpr u64 kSumModulusCap = 100000;  // direct summation cap

struct sum_result {
    cplx value{0.0, 0.0};
    u64 modulus = 1;
    std::vector<i64> params;
    double tolerance = 0.0;  // 1e-9 * number of summed terms
};

// G*(a;q) = q^(-1/2) sum over units n of e_q(a n^2).
sum_result gauss_star(i64 a, u64 q);

// K2(c,d;q) = q^(-1/2) sum over units n of e_q(c * inv(n)^2 + d * n).
sum_result k2_sum(i64 c, i64 d, u64 q);

// Ku2(c,d;s) = s^(-1/2) sum over units m of e_s(c m^3 + d m^2).
sum_result kummer2_sum(i64 c, i64 d, u64 s);

struct gauss_structure_result {
    cplx value;
    bool vanish_predicted;  // (a,q)=1 and (16 | q or odd(q) not squarefree)
    bool vanishes_as_predicted;  // |value| <= tol whenever predicted
    bool bound_ok;               // |value| <= tau(q) * sqrt((a,q)) + tol
};
// Structural facts for G*: forced vanishing and the magnitude bound with
// constant 1 (the latter is reported, not asserted).
gauss_structure_result gauss_star_structure_check(i64 a, u64 q);

struct pair_check {
    cplx lhs, rhs;
    double tolerance;
    bool agree;
};

// K2(c,d;qr) vs K2(c inv(r), d inv(r); q) * K2(c inv(q), d inv(q); r).
pair_check k2_crt_check(i64 c, i64 d, u64 q, u64 r);

// Salie: K2(c,d;q^2) equals the short sum over 1 <= l <= q, (l,q)=1 with
// d l^3 = 2c (q) of e_{q^2}(c inv(l)^2 + d l), inverses taken mod q^2.
pair_check k2_salie_check(i64 c, i64 d, u64 q);

struct correlation_result {
    double sum_form;        // |sum_n K2(n,c;q) conj(K2(n,d;q))|
    double ramanujan_form;  // |sum over l^2=1 (q) of c_q(c - d l)|
    double bound;           // gcd(c^2 - d^2, q) * tau(q)
    double tolerance;
    bool identity_ok;
    bool bound_ok;
};
correlation_result correlation_check(i64 c, i64 d, u64 q);

struct twisted_sum_result {
    double value;   // |sum_{n<=N} e(alpha n) K2(a n, c; q)|
    double bound1;  // N
    double bound2;  // sqrt(q) + N/sqrt(q)
    bool ok;        // value <= C * q^eps * min(bound1, bound2)
};
twisted_sum_result twisted_incomplete_k2(double alpha, i64 a, i64 c, u64 q, u64 N,
                                         double C, double eps);

// |sum over units n of e_q(c n^k + d n^l)| / sqrt(q * gcd(c,d,q)); negative
// exponents act through modular inverses. Report-only normalization of the
// binomial-phase bound.
double shparlinski_ratio(i64 c, i64 d, int k, int l, u64 q);

}  // namespace palsieve
