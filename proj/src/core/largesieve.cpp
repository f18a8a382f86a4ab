#include "core/largesieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/arith.hpp"
#include "core/harmonics.hpp"

namespace palsieve {

namespace {

void check_grid(u64 D, u64 q, u64 cap) {
    if (D == 0 || q == 0) throw std::domain_error("largesieve: D, q >= 1");
    if ((u128)q * D * D > cap) throw std::out_of_range("largesieve: q*D^2 cap exceeded");
}

struct fraction {
    u64 num;  // h
    u64 den;  // q d^2
};

// All coprime fractions h/(qd^2), d <= D, as positions in [0,1).
std::vector<fraction> farey_fractions(u64 D, u64 q) {
    std::vector<fraction> fr;
    for (u64 d = 1; d <= D; ++d) {
        u64 m = q * d * d;
        if (m == 1) {
            fr.push_back({0, 1});
            continue;
        }
        for (u64 h = 0; h < m; ++h)
            if (std::gcd(h, m) == 1) fr.push_back({h, m});
    }
    return fr;
}

// alpha reduced to [0,1) as an exact dyadic rational A / 2^k, k <= 75.
void dyadic_of(double alpha, i64& A, int& k) {
    double r = alpha - std::floor(alpha);
    if (r >= 1.0) r = 0.0;  // floor rounding at the seam
    if (r == 0.0) {
        A = 0;
        k = 0;
        return;
    }
    int e;
    double m = std::frexp(r, &e);  // r = m * 2^e, m in [0.5, 1)
    k = 53 - e;
    if (k > 75) {  // r < 2^-22: clamp the exponent, error < 2^-76
        A = (i64)std::ldexp(r, 75);
        k = 75;
        return;
    }
    A = (i64)std::ldexp(m, 53);
}

}  // namespace

double delta_bound(u64 D, u64 N, u64 q, double eps) {
    if (D == 0 || N == 0 || q == 0) throw std::domain_error("delta_bound: D, N, q >= 1");
    double dn = (double)D * (double)N;
    return std::pow(dn, eps) * (1.0 + (double)q / (double)N) *
           ((double)q * (double)D * (double)D * (double)D +
            (double)N * std::sqrt((double)D));
}

u64 spacing_count(u64 D, u64 N, u64 q, double alpha) {
    check_grid(D, q, 1000000);
    if (N == 0) throw std::domain_error("spacing_count: N >= 1");
    i64 A;
    int k;
    dyadic_of(alpha, A, k);
    const i128 B = (i128)1 << k;
    u64 count = 0;
    for (auto [h, m] : farey_fractions(D, q)) {
        // || h/m - A/B || <= 1/N  <=>  N * symm_mod(h B - A m, m B) <= m B
        i128 mB = (i128)m * B;
        i128 r = ((i128)h * B - (i128)A * m) % mB;
        if (r < 0) r += mB;
        i128 dist = std::min(r, mB - r);
        if ((i128)N * dist <= mB) ++count;
    }
    return N * count;
}

u64 spacing_sup(u64 D, u64 N, u64 q) {
    check_grid(D, q, 1000000);
    if (N == 0) throw std::domain_error("spacing_sup: N >= 1");
    auto fr = farey_fractions(D, q);
    std::sort(fr.begin(), fr.end(), [](const fraction& a, const fraction& b) {
        return (u128)a.num * b.den < (u128)b.num * a.den;
    });
    size_t F = fr.size();
    // window of length 2/N covers everything
    if ((u128)2 * 1 >= (u128)N) return N * F;  // N <= 2
    u64 best = 0;
    // left edge anchored at fr[i]; count points in [fr[i], fr[i] + 2/N]
    size_t j = 0;  // absolute index into the doubled circle
    for (size_t i = 0; i < F; ++i) {
        if (j < i) j = i;
        while (j < i + F) {
            const fraction& p = fr[j % F];
            u64 wrap = j >= F ? 1 : 0;
            // p + wrap <= fr[i] + 2/N ?
            u128 lhs = ((u128)p.num + (u128)wrap * p.den) * fr[i].den * N;
            u128 rhs = (u128)fr[i].num * p.den * N + (u128)2 * p.den * fr[i].den;
            if (lhs <= rhs)
                ++j;
            else
                break;
        }
        best = std::max<u64>(best, j - i);
    }
    return N * best;
}

quadratic_form_result ls_quadratic_form(const std::vector<cplx>& gamma, u64 D, u64 q) {
    check_grid(D, q, 100000);
    if (gamma.empty() || gamma.size() % 2 == 0)
        throw std::invalid_argument("ls_quadratic_form: gamma has 2N+1 entries");
    u64 N = (gamma.size() - 1) / 2;
    if (N > 10000) throw std::out_of_range("ls_quadratic_form: N cap exceeded");

    kahan l2;
    for (const cplx& g : gamma) l2.add(std::norm(g));

    // autocorrelation R(t) = sum_{n-n'=t} gamma_n conj(gamma_n'), t = -2N..2N
    std::vector<cplx> R(4 * N + 1, cplx(0, 0));
    for (size_t a = 0; a < gamma.size(); ++a)
        for (size_t b = 0; b < gamma.size(); ++b)
            R[size_t((i64)a - (i64)b + (i64)(2 * N))] += gamma[a] * std::conj(gamma[b]);

    // sum*_h |sum_n gamma_n e_m(hn)|^2 = sum_t R(t) c_m(t)
    kahan total;
    for (u64 d = 1; d <= D; ++d) {
        u64 m = q * d * d;
        // c_m(t) depends on t only through gcd(t, m); cache per divisor
        auto divs = divisors(factorize(m));
        std::vector<i64> c_of_div(divs.size());
        for (size_t i = 0; i < divs.size(); ++i) {
            u64 g = divs[i];
            u64 cof = m / g;
            int mu = mobius(cof);
            c_of_div[i] = mu == 0 ? 0 : (i64)mu * (i64)(euler_phi(m) / euler_phi(cof));
        }
        auto c_m = [&](i64 t) {
            u64 g = t == 0 ? m : std::gcd((u64)floor_mod(t, m), m);
            if (g == 0) g = m;
            size_t idx = size_t(std::lower_bound(divs.begin(), divs.end(), g) - divs.begin());
            return c_of_div[idx];
        };
        kahan_cplx acc;
        for (i64 t = -(i64)(2 * N); t <= (i64)(2 * N); ++t)
            acc.add(R[size_t(t + (i64)(2 * N))] * (double)c_m(t));
        total.add(acc.value().real());
    }
    return {total.sum, l2.sum};
}

double phi_moment_square_moduli(u32 base, u32 N, u32 K, u64 q, u64 D, double beta) {
    check_grid(D, q, 10000);
    if (K == 0) throw std::domain_error("phi_moment_square_moduli: K >= 1");
    if (N >= 2 && (u64)K * (N - 1) * (base - 1) > 64)
        throw std::out_of_range("phi_moment_square_moduli: budget exceeded");
    kahan total;
    for (u64 d = 1; d <= D; ++d) {
        u64 m = q * d * d;
        if (m == 1) {
            total.add(std::pow(phi_big_at_fraction(0, 1, beta, base, N), 2.0 * K));
            continue;
        }
        for (u64 h = 0; h < m; ++h) {
            if (std::gcd(h, m) != 1) continue;
            total.add(std::pow(phi_big_at_fraction(h, m, beta, base, N), 2.0 * K));
        }
    }
    return total.sum;
}

}  // namespace palsieve
