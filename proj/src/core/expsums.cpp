#include "core/expsums.hpp"

#include <cmath>
#include <numeric>

#include "core/arith.hpp"

namespace palsieve {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// e_m(t) table for t in [0, m); keeps per-term phase error at ~1 ulp.
std::vector<cplx> root_table(u64 m) {
    std::vector<cplx> roots(m);
    for (u64 t = 0; t < m; ++t) {
        double ang = kTwoPi * (double)t / (double)m;
        roots[t] = {std::cos(ang), std::sin(ang)};
    }
    return roots;
}

void check_modulus(u64 q, u64 cap = kSumModulusCap) {
    if (q == 0) throw std::domain_error("expsums: modulus >= 1");
    if (q > cap) throw std::out_of_range("expsums: modulus cap exceeded");
}

// Unit inverses mod m: inv[n] for (n,m)=1, 0 otherwise.
std::vector<u64> inverse_table(u64 m) {
    std::vector<u64> inv(m, 0);
    for (u64 n = 1; n < m; ++n)
        if (std::gcd(n, m) == 1) inv[n] = mod_inverse((i64)n, m);
    if (m == 1) inv = {0};
    return inv;
}

}  // namespace

sum_result gauss_star(i64 a, u64 q) {
    check_modulus(q);
    if (q == 1) return {cplx(1.0, 0.0), 1, {a}, 1e-9};
    auto roots = root_table(q);
    u64 ar = (u64)floor_mod(a, q);
    kahan_cplx acc;
    u64 terms = 0;
    for (u64 n = 1; n < q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        acc.add(roots[mulmod(ar, mulmod(n, n, q), q)]);
        ++terms;
    }
    return {acc.value() / std::sqrt((double)q), q, {a}, 1e-9 * (double)std::max<u64>(terms, 1)};
}

sum_result k2_sum(i64 c, i64 d, u64 q) {
    check_modulus(q);
    if (q == 1) return {cplx(1.0, 0.0), 1, {c, d}, 1e-9};
    auto roots = root_table(q);
    auto inv = inverse_table(q);
    u64 cr = (u64)floor_mod(c, q), dr = (u64)floor_mod(d, q);
    kahan_cplx acc;
    u64 terms = 0;
    for (u64 n = 1; n < q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        u64 t = addmod(mulmod(cr, mulmod(inv[n], inv[n], q), q), mulmod(dr, n, q), q);
        acc.add(roots[t]);
        ++terms;
    }
    return {acc.value() / std::sqrt((double)q), q, {c, d}, 1e-9 * (double)std::max<u64>(terms, 1)};
}

sum_result kummer2_sum(i64 c, i64 d, u64 s) {
    check_modulus(s);
    if (s == 1) return {cplx(1.0, 0.0), 1, {c, d}, 1e-9};
    auto roots = root_table(s);
    u64 cr = (u64)floor_mod(c, s), dr = (u64)floor_mod(d, s);
    kahan_cplx acc;
    u64 terms = 0;
    for (u64 m = 1; m < s; ++m) {
        if (std::gcd(m, s) != 1) continue;
        u64 m2 = mulmod(m, m, s);
        u64 t = addmod(mulmod(cr, mulmod(m2, m, s), s), mulmod(dr, m2, s), s);
        acc.add(roots[t]);
        ++terms;
    }
    return {acc.value() / std::sqrt((double)s), s, {c, d}, 1e-9 * (double)std::max<u64>(terms, 1)};
}

gauss_structure_result gauss_star_structure_check(i64 a, u64 q) {
    check_modulus(q);
    sum_result g = gauss_star(a, q);
    u64 ar = (u64)floor_mod(a, q);
    u64 g_aq = ar == 0 ? q : std::gcd(ar, q);
    u64 qq = q;
    u32 two_exp = 0;
    while (qq % 2 == 0) {
        qq /= 2;
        ++two_exp;
    }
    bool coprime = g_aq == 1;
    bool predicted = coprime && (two_exp >= 4 || !is_squarefree(qq));
    double mag = std::abs(g.value);
    bool vanishes = !predicted || mag <= g.tolerance;
    bool bound_ok = mag <= (double)tau(q) * std::sqrt((double)g_aq) + g.tolerance;
    return {g.value, predicted, vanishes, bound_ok};
}

pair_check k2_crt_check(i64 c, i64 d, u64 q, u64 r) {
    if (q == 0 || r == 0) throw std::domain_error("k2_crt_check: moduli >= 1");
    if (std::gcd(q, r) != 1) throw std::domain_error("k2_crt_check: moduli not coprime");
    check_modulus(q * r);
    sum_result lhs = k2_sum(c, d, q * r);
    u64 r_inv_q = q == 1 ? 0 : mod_inverse((i64)(r % q), q);
    u64 q_inv_r = r == 1 ? 0 : mod_inverse((i64)(q % r), r);
    cplx rhs = k2_sum((i64)mulmod((u64)floor_mod(c, q), r_inv_q, std::max<u64>(q, 1)),
                      (i64)mulmod((u64)floor_mod(d, q), r_inv_q, std::max<u64>(q, 1)), q)
                   .value *
               k2_sum((i64)mulmod((u64)floor_mod(c, r), q_inv_r, std::max<u64>(r, 1)),
                      (i64)mulmod((u64)floor_mod(d, r), q_inv_r, std::max<u64>(r, 1)), r)
                   .value;
    double tol = 1e-9 * (double)(q * r);
    return {lhs.value, rhs, tol, std::abs(lhs.value - rhs) <= tol};
}

pair_check k2_salie_check(i64 c, i64 d, u64 q) {
    if (q == 0) throw std::domain_error("k2_salie_check: q >= 1");
    if (q > 300) throw std::out_of_range("k2_salie_check: q cap exceeded");
    u64 q2 = q * q;
    sum_result def = k2_sum(c, d, q2);
    auto roots = root_table(q2);
    u64 cr = (u64)floor_mod(c, q2), dr = (u64)floor_mod(d, q2);
    u64 c2 = (u64)floor_mod(2 * c, q), dq = (u64)floor_mod(d, q);
    kahan_cplx acc;
    for (u64 l = 1; l <= q; ++l) {
        if (std::gcd(l, q) != 1) continue;
        if (mulmod(dq, mulmod(l, mulmod(l, l, q), q), q) != c2) continue;
        u64 linv = mod_inverse((i64)(l % q2), q2);  // inverse mod q^2
        u64 t = addmod(mulmod(cr, mulmod(linv, linv, q2), q2), mulmod(dr, l % q2, q2), q2);
        acc.add(roots[t]);
    }
    double tol = 1e-9 * (double)q2;
    cplx formula = acc.value();
    return {formula, def.value, tol, std::abs(formula - def.value) <= tol};
}

correlation_result correlation_check(i64 c, i64 d, u64 q) {
    check_modulus(q, 2000);
    u64 cr = (u64)floor_mod(c, q), dr = (u64)floor_mod(d, q);

    // K2(n, c; q) for all n mod q via one pass over unit pairs
    auto roots = root_table(q);
    auto inv = inverse_table(q);
    auto k2_row = [&](u64 fixed) {
        std::vector<cplx> row(q, cplx(0, 0));
        if (q == 1) {
            row[0] = cplx(1.0, 0.0);
            return row;
        }
        std::vector<kahan_cplx> acc(q);
        for (u64 m = 1; m < q; ++m) {
            if (std::gcd(m, q) != 1) continue;
            u64 invsq = mulmod(inv[m], inv[m], q);
            u64 base = mulmod(fixed, m, q);
            for (u64 n = 0; n < q; ++n) acc[n].add(roots[addmod(mulmod(n, invsq, q), base, q)]);
        }
        double norm = std::sqrt((double)q);
        for (u64 n = 0; n < q; ++n) row[n] = acc[n].value() / norm;
        return row;
    };
    std::vector<cplx> row_c = k2_row(cr);
    std::vector<cplx> row_d = dr == cr ? row_c : k2_row(dr);

    kahan_cplx corr;
    for (u64 n = 0; n < q; ++n) corr.add(row_c[n] * std::conj(row_d[n]));
    double sum_form = std::abs(corr.value());

    i64 rama = 0;
    for (u64 l = 0; l < q; ++l) {
        if (mulmod(l, l, q) != 1 % q) continue;
        rama += ramanujan_c(q, (i64)cr - (i64)mulmod(dr, l, q));
    }
    double rama_form = std::abs((double)rama);

    i128 v = (i128)c * c - (i128)d * d;
    i64 diff2 = (i64)(v % (i128)q);
    if (diff2 < 0) diff2 += (i64)q;
    u64 g = diff2 == 0 ? q : std::gcd((u64)diff2, q);
    double bound = (double)g * (double)tau(q);
    double tol = 1e-9 * (double)q * (double)q;
    return {sum_form, rama_form, bound, tol,
            std::abs(sum_form - rama_form) <= tol, sum_form <= bound + tol};
}

twisted_sum_result twisted_incomplete_k2(double alpha, i64 a, i64 c, u64 q, u64 N,
                                         double C, double eps) {
    check_modulus(q, 2000);
    if (N == 0 || N > 100000) throw std::out_of_range("twisted_incomplete_k2: N cap");
    if (std::gcd((u64)floor_mod(a, q), q) != 1 && q > 1)
        throw std::domain_error("twisted_incomplete_k2: need (a, q) = 1");
    // K2(m, c; q) for every m mod q, then the n-sum is a table walk
    std::vector<cplx> table(q);
    for (u64 m = 0; m < q; ++m) table[m] = k2_sum((i64)m, c, q).value;
    u64 ar = (u64)floor_mod(a, q);
    kahan_cplx acc;
    for (u64 n = 1; n <= N; ++n) {
        double ang = kTwoPi * alpha * (double)n;
        acc.add(cplx(std::cos(ang), std::sin(ang)) * table[mulmod(ar, n % q, q)]);
    }
    double value = std::abs(acc.value());
    double b1 = (double)N;
    double b2 = std::sqrt((double)q) + (double)N / std::sqrt((double)q);
    bool ok = value <= C * std::pow((double)q, eps) * std::min(b1, b2);
    return {value, b1, b2, ok};
}

double shparlinski_ratio(i64 c, i64 d, int k, int l, u64 q) {
    check_modulus(q, 2000);
    if (k == l || k == 0 || l == 0 || std::abs(k) > 4 || std::abs(l) > 4)
        throw std::domain_error("shparlinski_ratio: need distinct nonzero |k|,|l| <= 4");
    auto roots = root_table(q);
    auto inv = inverse_table(q);
    u64 cr = (u64)floor_mod(c, q), dr = (u64)floor_mod(d, q);
    auto mono = [&](u64 n, int e) {
        u64 base = e < 0 ? inv[n] : n;
        u64 r = 1;
        for (int i = 0; i < std::abs(e); ++i) r = mulmod(r, base, q);
        return r;
    };
    kahan_cplx acc;
    if (q == 1) {
        acc.add(cplx(1.0, 0.0));
    } else {
        for (u64 n = 1; n < q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            acc.add(roots[addmod(mulmod(cr, mono(n, k), q), mulmod(dr, mono(n, l), q), q)]);
        }
    }
    u64 g = std::gcd(std::gcd(cr == 0 ? q : cr, dr == 0 ? q : dr), q);
    return std::abs(acc.value()) / std::sqrt((double)q * (double)g);
}

}  // namespace palsieve
