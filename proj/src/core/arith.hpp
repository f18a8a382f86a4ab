#pragma once

// Elementary arithmetic: factorization up to 10^18, multiplicative functions,
// modular inverses / CRT, Ramanujan sums, exact rationals, and the singular
// series prod_{p|n} (1 - p^-2)^-1.

#include "core/common.hpp"

namespace palsieve {

struct prime_power {
    u64 p;
    u32 e;
};
using factorization = std::vector<prime_power>;  // sorted by p

// Shared read-only prime table (primes below 10^6), built on first use.
const std::vector<u32>& prime_table();

bool is_prime_u64(u64 n);  // deterministic Miller-Rabin witness set

// Trial division to the cube root, then the cofactor is classified as
// 1 / prime / p^2 / semiprime (the last split by Pollard-Brent).
factorization factorize(u64 n);

struct arith_info {
    u64 phi;
    int mobius;  // -1, 0, 1
    u64 tau;
    u64 odd_part;
};
arith_info arithmetic_functions(u64 n);

u64 euler_phi(u64 n);
int mobius(u64 n);
u64 tau(u64 n);

// True iff no p^2 divides n. Avoids full factorization: early p^2 exit during
// trial division, then a perfect-square test on the cofactor.
bool is_squarefree(u64 n);

// Largest s with s^2 | n (so n is squarefree iff s = 1).
u64 square_part(u64 n);

std::vector<u64> divisors(const factorization& f);

// Inverse of a mod q, requires gcd(a,q) = 1; q = 1 yields 0.
u64 mod_inverse(i64 a, u64 q);

// x in [0, q1*q2) with x = a1 (q1), x = a2 (q2); moduli must be coprime.
u64 crt_combine(i64 a1, u64 q1, i64 a2, u64 q2);

struct rational {
    i64 num = 0;
    u64 den = 1;  // positive, gcd(|num|, den) = 1
    bool operator==(const rational&) const = default;
};
rational make_rational(i64 num, u64 den);
rational rat_mul(rational a, rational b);
rational rat_add(rational a, rational b);
double rat_to_double(rational r);

// 1/(mn) = inv(m)/n + inv(n)/m (mod 1) for coprime m, n; both sides returned
// as reduced fractions in [0, 1).
struct bezout_identity {
    rational lhs;
    rational rhs;
    bool holds;
};
bezout_identity bezout_check(u64 m, u64 n);

// Ramanujan sum c_q(n) via the mu/phi closed form; exact integer.
i64 ramanujan_c(u64 q, i64 n);

// prod_{p | n} (1 - p^-2)^-1 as an exact reduced fraction; 1 for n = 1.
rational singular_series(u64 n);

// |sum_{d<=D, (d,k)=1} mu(d)/d^2 - (6/pi^2) S(k)|; the Euler-product tail.
double singular_series_tail_gap(u64 k, u64 D);

struct gcd_sum_result {
    u64 lhs;  // sum_{1<=n<=N} gcd(n, q)
    u64 rhs;  // N * tau(q)
    bool holds;
};
gcd_sum_result gcd_sum_check(u64 N, u64 q);

}  // namespace palsieve
