#include "core/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace palsieve {

const std::vector<u32>& prime_table() {
    static const std::vector<u32> table = [] {
        const u32 limit = 1000000;
        std::vector<bool> comp(limit + 1, false);
        std::vector<u32> primes;
        for (u32 i = 2; i <= limit; ++i) {
            if (!comp[i]) {
                primes.push_back(i);
                for (u64 j = (u64)i * i; j <= limit; j += i) comp[j] = true;
            }
        }
        return primes;
    }();
    return table;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Pollard-Brent; n must be odd composite and not a prime power handled upstream.
static u64 pollard_brent(u64 n) {
    rng64 rng(0x5eedc0ffee123457ull ^ n);
    for (;;) {
        u64 y = rng.next() % (n - 2) + 1;
        u64 c = rng.next() % (n - 1) + 1;
        u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c, n);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = addmod(mulmod(y, y, n), c, n);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = addmod(mulmod(ys, ys, n), c, n);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n >= 1");
    if (n > kMaxWidth) throw std::out_of_range("factorize: width cap exceeded");
    factorization f;
    u64 m = n;
    for (u32 p : prime_table()) {
        if ((u128)p * p * p > m) break;
        if (m % p == 0) {
            u32 e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.push_back({p, e});
        }
    }
    if (m > 1) {
        // cofactor has at most two prime factors, each above the cube root
        u64 root;
        if (is_perfect_square(m, &root)) {
            f.push_back({root, 2});
        } else if (is_prime_u64(m)) {
            f.push_back({m, 1});
        } else {
            u64 a = pollard_brent(m);
            u64 b = m / a;
            if (a > b) std::swap(a, b);
            f.push_back({a, 1});
            if (a == b)
                f.back().e = 2;
            else
                f.push_back({b, 1});
        }
    }
    std::sort(f.begin(), f.end(), [](auto& x, auto& y) { return x.p < y.p; });
    return f;
}

arith_info arithmetic_functions(u64 n) {
    if (n == 0) throw std::domain_error("arithmetic_functions: n >= 1");
    arith_info r{1, 1, 1, n};
    for (auto [p, e] : factorize(n)) {
        u64 pe1 = 1;
        for (u32 i = 0; i + 1 < e; ++i) pe1 *= p;
        r.phi *= pe1 * (p - 1);
        r.mobius = e > 1 ? 0 : -r.mobius;
        r.tau *= e + 1;
    }
    while (r.odd_part % 2 == 0) r.odd_part /= 2;
    return r;
}

u64 euler_phi(u64 n) { return arithmetic_functions(n).phi; }
int mobius(u64 n) { return arithmetic_functions(n).mobius; }
u64 tau(u64 n) { return arithmetic_functions(n).tau; }

bool is_squarefree(u64 n) {
    if (n == 0) throw std::domain_error("is_squarefree: n >= 1");
    u64 m = n;
    for (u32 p : prime_table()) {
        if ((u128)p * p * p > m) break;
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    // remaining cofactor is 1, p, p^2 or a semiprime
    return m == 1 || !is_perfect_square(m);
}

u64 square_part(u64 n) {
    u64 s = 1;
    for (auto [p, e] : factorize(n)) {
        for (u32 i = 0; i < e / 2; ++i) s *= p;
    }
    return s;
}

std::vector<u64> divisors(const factorization& f) {
    std::vector<u64> divs{1};
    for (auto [p, e] : f) {
        size_t count = divs.size();
        u64 pe = 1;
        for (u32 i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 mod_inverse(i64 a, u64 q) {
    if (q == 0) throw std::domain_error("mod_inverse: q >= 1");
    if (q == 1) return 0;
    i64 r0 = (i64)q, r1 = floor_mod(a, q);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        t0 -= k * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return (u64)floor_mod(t0, q);
}

u64 crt_combine(i64 a1, u64 q1, i64 a2, u64 q2) {
    if (q1 == 0 || q2 == 0) throw std::domain_error("crt_combine: moduli >= 1");
    if (std::gcd(q1, q2) != 1) throw std::domain_error("crt_combine: moduli not coprime");
    u64 r1 = (u64)floor_mod(a1, q1);
    u64 r2 = (u64)floor_mod(a2, q2);
    // x = r1 + q1 * t, t = (r2 - r1) * inv(q1) mod q2
    u64 diff = addmod(r2, q2 - r1 % q2, q2);
    u64 t = mulmod(diff, mod_inverse((i64)(q1 % q2), q2), q2);
    return r1 + q1 * t;
}

static u64 checked_umul(u64 a, u64 b) {
    u128 r = (u128)a * b;
    if (r > (u128)UINT64_MAX) throw std::out_of_range("rational: overflow");
    return (u64)r;
}

rational make_rational(i64 num, u64 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    u64 g = std::gcd((u64)(num < 0 ? -num : num), den);
    if (g > 1) {
        num /= (i64)g;
        den /= g;
    }
    return {num, den};
}

rational rat_mul(rational a, rational b) {
    // cross-reduce first to keep intermediates small
    u64 g1 = std::gcd((u64)(a.num < 0 ? -a.num : a.num), b.den);
    u64 g2 = std::gcd((u64)(b.num < 0 ? -b.num : b.num), a.den);
    i64 n = (a.num / (i64)g1) * (b.num / (i64)g2);
    u64 d = checked_umul(a.den / g2, b.den / g1);
    return make_rational(n, d);
}

rational rat_add(rational a, rational b) {
    u64 g = std::gcd(a.den, b.den);
    u64 d = checked_umul(a.den / g, b.den);
    i64 n = a.num * (i64)(b.den / g) + b.num * (i64)(a.den / g);
    return make_rational(n, d);
}

double rat_to_double(rational r) { return (double)r.num / (double)r.den; }

bezout_identity bezout_check(u64 m, u64 n) {
    if (m == 0 || n == 0 || std::gcd(m, n) != 1)
        throw std::domain_error("bezout_check: need coprime m, n >= 1");
    rational lhs = make_rational(1, checked_umul(m, n));
    rational rhs = rat_add(make_rational((i64)mod_inverse((i64)m, n), n),
                           make_rational((i64)mod_inverse((i64)n, m), m));
    // reduce mod 1
    rhs.num = floor_mod(rhs.num, rhs.den);
    rhs = make_rational(rhs.num, rhs.den);
    return {lhs, rhs, lhs == rhs};
}

i64 ramanujan_c(u64 q, i64 n) {
    if (q == 0) throw std::domain_error("ramanujan_c: q >= 1");
    if (q == 1) return 1;
    u64 g = std::gcd((u64)floor_mod(n, q), q);
    if (g == 0) g = q;
    u64 m = q / g;
    int mu = mobius(m);
    if (mu == 0) return 0;
    return (i64)mu * (i64)(euler_phi(q) / euler_phi(m));
}

rational singular_series(u64 n) {
    if (n == 0) throw std::domain_error("singular_series: n >= 1");
    rational r{1, 1};
    for (auto [p, e] : factorize(n)) {
        (void)e;
        u64 p2 = checked_umul(p, p);
        r = rat_mul(r, make_rational((i64)p2, p2 - 1));
    }
    return r;
}

double singular_series_tail_gap(u64 k, u64 D) {
    kahan partial;
    for (u64 d = 1; d <= D; ++d) {
        if (std::gcd(d, k) != 1) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        partial.add((double)mu / ((double)d * (double)d));
    }
    const double pi = 3.14159265358979323846;
    double target = 6.0 / (pi * pi) * rat_to_double(singular_series(k));
    return std::abs(partial.sum - target);
}

gcd_sum_result gcd_sum_check(u64 N, u64 q) {
    if (N == 0 || q == 0) throw std::domain_error("gcd_sum_check: N, q >= 1");
    u64 lhs = 0;
    for (u64 n = 1; n <= N; ++n) lhs += std::gcd(n, q);
    u64 rhs = N * tau(q);
    return {lhs, rhs, lhs <= rhs};
}

}  // namespace palsieve
