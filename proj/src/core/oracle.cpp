#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/harmonics.hpp"

namespace palsieve::oracle {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<u32> digit_string(u64 n, u32 base) {
    std::vector<u32> ds;
    do {
        ds.push_back(u32(n % base));
        n /= base;
    } while (n);
    return ds;
}
}  // namespace

std::vector<u64> naive_pal_set(u32 base, u64 x) {
    if (base < 2) throw std::domain_error("naive_pal_set: base >= 2");
    if (x > 10000000ull) throw std::out_of_range("naive_pal_set: x cap exceeded");
    std::vector<u64> out;
    for (u64 n = 1; n <= x; ++n) {
        auto ds = digit_string(n, base);
        auto rev = ds;
        std::reverse(rev.begin(), rev.end());
        if (ds == rev) out.push_back(n);
    }
    return out;
}

bool naive_squarefree(u64 n) {
    if (n == 0) throw std::domain_error("naive_squarefree: n >= 1");
    if (n > 1000000000ull) throw std::out_of_range("naive_squarefree: n cap exceeded");
    for (u64 p = 2; p * p <= n; ++p) {
        u32 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e >= 2) return false;
    }
    return true;
}

std::vector<u64> naive_quasi_set(u32 base, u32 L, u32 level) {
    if (base < 2 || level == 0) throw std::domain_error("naive_quasi_set: bad arguments");
    u64 lo = checked_pow(base, L), hi = checked_pow(base, L + 1);
    if (hi > 1000000000ull) throw std::out_of_range("naive_quasi_set: block cap exceeded");
    std::vector<u64> out;
    for (u64 n = lo; n < hi; ++n) {
        if (std::gcd(n % base, (u64)base) != 1) continue;
        auto ds = digit_string(n, base);
        bool ok = true;
        for (u32 j = 0; j < level && ok; ++j)
            ok = ds[j] == ds[ds.size() - 1 - j];
        if (ok) out.push_back(n);
    }
    return out;
}

std::vector<u64> naive_quasi_counts(u32 base, u32 L, u32 max_level, u32 threads) {
    if (base < 2 || max_level == 0 || 2 * max_level > L)
        throw std::domain_error("naive_quasi_counts: bad arguments");
    u64 lo = checked_pow(base, L), hi = checked_pow(base, L + 1);
    if (hi > kMaxWidth) throw std::out_of_range("naive_quasi_counts: block cap");
    u64 span = hi - lo;
    u32 tasks = threads > 1 ? threads * 8 : 1;
    std::vector<std::vector<u64>> partial(tasks, std::vector<u64>(max_level, 0));
    std::vector<u64> powers(L + 2, 1);
    for (u32 j = 1; j <= L + 1; ++j) powers[j] = powers[j - 1] * base;
    parallel_for(tasks, threads, [&](u64 t) {
        u64 n0 = lo + span * t / tasks;
        u64 n1 = lo + span * (t + 1) / tasks;
        auto& counts = partial[t];
        for (u64 n = n0; n < n1; ++n) {
            if (std::gcd(n % base, (u64)base) != 1) continue;
            for (u32 j = 0; j < max_level; ++j) {
                u32 low = u32(n / powers[j] % base);
                u32 high = u32(n / powers[L - j] % base);
                if (low != high) break;
                ++counts[j];  // quasi at every level <= j+1 so far
            }
        }
    });
    std::vector<u64> out(max_level, 0);
    for (auto& part : partial)
        for (u32 j = 0; j < max_level; ++j) out[j] += part[j];
    return out;
}

inequality_check vdc_check(const std::vector<cplx>& z, u64 H) {
    if (z.empty() || H == 0) throw std::domain_error("vdc_check: need N, H >= 1");
    u64 N = z.size();
    kahan_cplx direct;
    for (const cplx& v : z) direct.add(v);
    double lhs = std::norm(direct.value());

    kahan_cplx rhs_acc;
    for (i64 h = -(i64)H + 1; h < (i64)H; ++h) {
        double weight = 1.0 - (double)std::abs(h) / (double)H;
        kahan_cplx shift;
        for (i64 n = 1; n <= (i64)N; ++n) {
            i64 m = n + h;
            if (m < 1 || m > (i64)N) continue;
            shift.add(z[size_t(m - 1)] * std::conj(z[size_t(n - 1)]));
        }
        rhs_acc.add(weight * shift.value());
    }
    cplx rhs_c = rhs_acc.value() * ((double)(N + H - 1) / (double)H);
    double tol = 1e-7 * (double)N * (double)N;
    bool holds = std::abs(rhs_c.imag()) <= tol && lhs <= rhs_c.real() + tol;
    return {lhs, rhs_c.real(), holds};
}

cong_bound_result cong_bound_check(u64 M, u64 N, u64 q) {
    if (M == 0 || N == 0 || q == 0) throw std::domain_error("cong_bound_check: M,N,q >= 1");
    if (M > 10000 || N > 10000 || q > 10000)
        throw std::out_of_range("cong_bound_check: grid cap exceeded");
    u64 lhs = 0;
    std::vector<u64> hist(q);
    for (u64 m = 1; m <= M; ++m) {
        std::fill(hist.begin(), hist.end(), 0);
        for (u64 n = 1; n <= N; ++n) ++hist[mulmod(m % q, n % q, q)];
        lhs += *std::max_element(hist.begin(), hist.end());
    }
    u64 t = 1;
    {
        u64 qq = q;
        for (u64 p = 2; p * p <= qq; ++p) {
            u32 e = 0;
            while (qq % p == 0) {
                qq /= p;
                ++e;
            }
            t *= e + 1;
        }
        if (qq > 1) t *= 2;
    }
    u64 rhs_num = M * N * t + M * q * t;  // over denominator q
    bool holds = (u128)lhs * q <= (u128)rhs_num;
    return {lhs, rhs_num, holds, (double)rhs_num / (double)q};
}

double quad_moment(u32 base, u32 N, u32 K, u64 panels) {
    if (base < 2 || K == 0) throw std::domain_error("quad_moment: bad arguments");
    if (N <= 1) return 1.0;
    u64 start = panels;
    if (start == 0) {
        if (!pow_at_most(base, 2 * N, 1 << 22)) throw std::out_of_range("quad_moment: N too large");
        start = 4ull * K * checked_pow(base, 2 * N);
    }
    u64 m = 64;
    while (m < start) m <<= 1;
    double prev = -1.0;
    for (int rounds = 0; rounds < 24; ++rounds) {
        // 1-periodic integrand: equispaced mean is the trapezoid rule
        kahan acc;
        for (u64 i = 0; i < m; ++i) {
            double alpha = (double)i / (double)m;
            acc.add(std::pow(phi_big(alpha, base, N), 2.0 * (double)K));
        }
        double value = acc.sum / (double)m;
        if (prev >= 0 && std::abs(value - prev) <= 1e-6 * std::max(1.0, std::abs(value)))
            return value;
        prev = value;
        m <<= 1;
    }
    throw std::runtime_error("quad_moment: no convergence after 24 doublings");
}

u64 naive_square_pair_count(u32 base, u32 L, u64 q, i64 a, u64 N) {
    if (base < 2 || q == 0 || N == 0) throw std::domain_error("naive_square_pair_count: bad arguments");
    u64 lo = checked_pow(base, L), hi = checked_pow(base, L + 1);
    if (hi > 10000000ull) throw std::out_of_range("naive_square_pair_count: block cap");
    u64 res = (u64)floor_mod(a, q);
    u64 count = 0;
    for (u64 n = N / 2 + 1; n <= N; ++n) {
        for (u64 l = lo; l < hi; ++l) {
            if (l % q != res) continue;
            if (std::gcd(l, (u64)base) != 1) continue;
            auto ds = digit_string(l, base);
            auto rev = ds;
            std::reverse(rev.begin(), rev.end());
            if (ds != rev) continue;
            if (l % (n * n) == 0) ++count;
        }
    }
    return count;
}

double naive_ls_quadratic_form(const std::vector<cplx>& gamma, u64 D, u64 q) {
    if (gamma.empty() || gamma.size() % 2 == 0)
        throw std::invalid_argument("naive_ls_quadratic_form: gamma has 2N+1 entries");
    i64 N = (i64)(gamma.size() - 1) / 2;
    kahan total;
    for (u64 d = 1; d <= D; ++d) {
        u64 m = q * d * d;
        for (u64 h = 0; h < m; ++h) {
            if (std::gcd(h, m) != 1) continue;
            kahan_cplx inner;
            for (i64 n = -N; n <= N; ++n) {
                double ang = kTwoPi * (double)h * (double)n / (double)m;
                inner.add(gamma[size_t(n + N)] * cplx(std::cos(ang), std::sin(ang)));
            }
            total.add(std::norm(inner.value()));
        }
    }
    return total.sum;
}

cplx naive_ramanujan_c(u64 q, i64 n) {
    if (q == 0) throw std::domain_error("naive_ramanujan_c: q >= 1");
    kahan_cplx acc;
    for (u64 h = 1; h <= q; ++h) {
        if (std::gcd(h % q, q) != 1) continue;
        double ang = kTwoPi * (double)mulmod(h % q, (u64)floor_mod(n, q), q) / (double)q;
        acc.add(cplx(std::cos(ang), std::sin(ang)));
    }
    return acc.value();
}

}  // namespace palsieve::oracle
