#include "core/harmonics.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "core/digits.hpp"
#include "core/palsets.hpp"

namespace palsieve {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

void check_base(u32 base) {
    if (base < 2) throw std::domain_error("harmonics: base must be >= 2");
}

// e(x) with the fractional reduction done in extended precision so that
// arguments up to ~10^12 keep sub-1e-7 phase accuracy.
cplx unit_phase(long double x) {
    long double f = x - std::floor((double)x);
    double ang = (double)(kTwoPi * (double)f);
    return {std::cos(ang), std::sin(ang)};
}
}  // namespace

double phi_little(double alpha, u32 base) {
    check_base(base);
    // |sin(pi b u)| / |sin(pi u)| with u = alpha reduced to [-1/2, 1/2]
    double u = alpha - std::nearbyint(alpha);
    double den = std::sin(kPi * u);
    if (den == 0.0) return (double)base;
    return std::abs(std::sin(kPi * (double)base * u) / den);
}

double phi_big(double alpha, u32 base, u32 N) {
    check_base(base);
    if (N <= 1) return 1.0;
    double prod = 1.0;
    for (u32 n = 1; n < N; ++n) {
        long double w = std::pow((long double)base, (int)n) + std::pow((long double)base, (int)(2 * N - n));
        long double arg = (long double)alpha * w;
        prod *= phi_little((double)(arg - std::floor((double)arg)), base);
    }
    return prod;
}

double phi_big_at_fraction(u64 num, u64 den, double beta, u32 base, u32 N) {
    check_base(base);
    if (den == 0) throw std::domain_error("phi_big_at_fraction: den >= 1");
    if (N <= 1) return 1.0;
    double prod = 1.0;
    for (u32 n = 1; n < N; ++n) {
        u64 w_mod = addmod(powmod(base, n, den), powmod(base, 2 * N - n, den), den);
        double frac = (double)mulmod(num % den, w_mod, den) / (double)den;
        long double w = std::pow((long double)base, (int)n) + std::pow((long double)base, (int)(2 * N - n));
        long double shift = (long double)beta * w;
        prod *= phi_little((double)(frac + (shift - std::floor((double)shift))), base);
    }
    return prod;
}

bound_check pal_exp_sum_check(double alpha, u32 base, u32 N) {
    check_base(base);
    if (!pow_at_most(base, 2 * N + 1, 1000000000000ull))
        throw std::out_of_range("pal_exp_sum_check: b^(2N+1) cap exceeded");
    kahan_cplx acc;
    u64 terms = 0;
    pal_block_iter it(base, 2 * N);
    for (u64 p; it.next(p);) {
        acc.add(unit_phase((long double)alpha * (long double)p));
        ++terms;
    }
    double lhs = std::abs(acc.value());
    double rhs = (double)base * (double)base * phi_big(alpha, base, N);
    double tol = 1e-9 * (double)std::max<u64>(terms, 1);
    return {lhs, rhs, lhs <= rhs + tol};
}

bound_check incomplete_sum_check(double alpha, u32 base, u64 x) {
    check_base(base);
    if (x > 1000000000ull) throw std::out_of_range("incomplete_sum_check: x cap exceeded");
    kahan_cplx acc;
    u64 terms = 0;
    // P0_b(x): palindromes <= x with even floor(log_b), i.e. odd digit count
    for_each_pal_upto(base, x, [&](u64 p) {
        if (digit_count(p, base) % 2 == 1) {
            acc.add(unit_phase((long double)alpha * (long double)p));
            ++terms;
        }
    });
    double lhs = std::abs(acc.value());
    u32 nmax = 0;
    while (pow_at_most(base, 2 * (nmax + 1), x)) ++nmax;  // b^(2N) <= x
    kahan rhs_acc;
    for (u32 N = 0; N <= nmax; ++N)
        for (u32 M = 0; M <= N; ++M)
            rhs_acc.add(phi_big(alpha * std::pow((double)base, (double)(N - M)), base, M));
    double rhs = (double)base * (double)base * rhs_acc.sum;
    double tol = 1e-9 * (double)std::max<u64>(terms, 1);
    return {lhs, rhs, lhs <= rhs + tol};
}

u64 phi_moment_exact(u32 base, u32 N, u32 K) {
    check_base(base);
    if (K == 0) throw std::domain_error("phi_moment_exact: K >= 1");
    if (N <= 1) return 1;
    u64 budget = (u64)K * (N - 1) * (base - 1);
    if (budget > 64) throw std::out_of_range("phi_moment_exact: budget exceeded");
    if (!pow_at_most(base, 2 * N, (u64)1 << 62))
        throw std::out_of_range("phi_moment_exact: weights exceed 2^62");

    // per-position distribution of s = sum_i (u_i - v_i) over 2K digits:
    // K-fold convolution of the triangle d(t) = b - |t|
    i64 spread = (i64)K * (i64)(base - 1);
    std::vector<u64> conv{1};
    i64 conv_lo = 0;
    for (u32 i = 0; i < 2 * K; ++i) {
        std::vector<u64> next(conv.size() + base - 1, 0);
        for (size_t j = 0; j < conv.size(); ++j)
            for (u32 digit = 0; digit < base; ++digit) next[j + digit] += conv[j];
        conv = std::move(next);
        conv_lo -= (i >= K) ? (i64)(base - 1) : 0;
    }
    // conv[idx] counts tuples with sum = conv_lo + idx; spread == K(b-1)

    std::unordered_map<i64, u128> dist;
    dist[0] = 1;
    for (u32 n = 1; n < N; ++n) {
        i64 w = (i64)(checked_pow(base, n) + checked_pow(base, 2 * N - n));
        std::unordered_map<i64, u128> next;
        next.reserve(dist.size() * (2 * (size_t)spread + 1));
        for (auto& [s, cnt] : dist) {
            for (i64 t = -spread; t <= spread; ++t) {
                u64 ways = conv[size_t(t - conv_lo)];
                if (!ways) continue;
                next[s + t * w] += cnt * ways;
            }
        }
        dist = std::move(next);
    }
    u128 zero = dist.count(0) ? dist[0] : 0;
    if (zero > (u128)UINT64_MAX) throw std::out_of_range("phi_moment_exact: count overflow");
    return (u64)zero;
}

shift_check algebraic_shift_check(u64 q, u32 base, double beta, u32 M, u32 N, double delta) {
    check_base(base);
    if (q == 0 || q > 500) throw std::out_of_range("algebraic_shift_check: q in [1, 500]");
    if (std::gcd(q, (u64)base) != 1)
        throw std::domain_error("algebraic_shift_check: need (q, b) = 1");
    if (M > N) throw std::domain_error("algebraic_shift_check: need M <= N");
    if (delta <= 0) throw std::domain_error("algebraic_shift_check: delta > 0");

    kahan lhs_acc, rhs_acc;
    double bM = std::pow((double)base, (double)M);
    for (u64 h = 1; h <= q; ++h) {
        if (std::gcd(h % q, q) != 1) continue;  // gcd(0,1)=1 keeps the q=1 class
        double hq = (double)(h % q) / (double)q;
        double prod = 1.0;
        for (u32 n = M + 1; n < N; ++n) {
            u64 w_mod = addmod(powmod(base, n, q), powmod(base, 2 * N - n, q), q);
            double frac = (double)mulmod(h % q, w_mod, q) / (double)q;
            long double w = std::pow((long double)base, (int)n) +
                            std::pow((long double)base, (int)(2 * N - n));
            long double shift = (long double)beta * w;
            prod *= std::pow(phi_little((double)(frac + (shift - std::floor((double)shift))), base), delta);
        }
        lhs_acc.add(prod);
        rhs_acc.add(std::pow(phi_big(hq + bM * beta, base, N - M), delta));
    }
    double tol = 1e-9 * (double)q;
    return {lhs_acc.sum, rhs_acc.sum, tol, std::abs(lhs_acc.sum - rhs_acc.sum) <= tol};
}

}  // namespace palsieve
