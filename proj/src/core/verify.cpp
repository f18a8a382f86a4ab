#include "core/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "core/arith.hpp"
#include "core/digits.hpp"
#include "core/equidist.hpp"
#include "core/expsums.hpp"
#include "core/harmonics.hpp"
#include "core/largesieve.hpp"
#include "core/oracle.hpp"
#include "core/palsets.hpp"

namespace palsieve {

namespace {

constexpr u64 kDefaultSeed = 20260809;

u64 pick(u64 v, u64 fallback) { return v ? v : fallback; }

std::string fmt(double v) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct failure_note {
    bool failed = false;
    std::string text;
    void record(const std::string& t) {
        if (!failed) text = t;
        failed = true;
    }
};

// ---------------------------------------------------------------------------
// measured baseline quantities (shared by regression checks and generation)
// ---------------------------------------------------------------------------

const std::vector<u64> kSieveGrid = {1, 2, 5, 10, 25, 50};

struct measured {
    double value = 0.0;
    std::string grid_hash;
};

measured measure_spacing_ratio() {
    double worst = 0.0;
    for (u64 q : kSieveGrid)
        for (u64 D : kSieveGrid) {
            if (q * D * D > 1000000) continue;
            for (u64 N : kSieveGrid) {
                double ratio = (double)spacing_sup(D, N, q) / delta_bound(D, N, q, 0.1);
                worst = std::max(worst, ratio);
            }
        }
    return {worst, hex64(fnv1a("spacing:grid={1,2,5,10,25,50};eps=0.1;capped=1e6"))};
}

measured measure_quadform_ratio(u64 seed) {
    double worst = 0.0;
    for (u64 q : kSieveGrid)
        for (u64 D : kSieveGrid) {
            if (q * D * D > 100000) continue;
            for (u64 N : kSieveGrid) {
                for (u64 s = 1; s <= 20; ++s) {
                    rng64 rng(seed ^ (N * 1315423911ull) ^ (s * 2654435761ull));
                    std::vector<cplx> gamma(2 * N + 1);
                    for (auto& g : gamma) {
                        double ang = 2.0 * 3.14159265358979323846 * rng.uniform();
                        g = {std::cos(ang), std::sin(ang)};
                    }
                    auto r = ls_quadratic_form(gamma, D, q);
                    double ratio = r.value / (delta_bound(D, N, q, 0.1) * r.gamma_l2);
                    worst = std::max(worst, ratio);
                }
            }
        }
    return {worst, hex64(fnv1a("quadform:grid={1,2,5,10,25,50};eps=0.1;seqs=20;seed=" +
                               std::to_string(seed)))};
}

// One block pass per L: residue histograms for every q <= qmax (with the
// coprime-to-base filter) and divisibility counts for every m <= qmax
// (unfiltered), merged deterministically.
struct bs_scan_result {
    double bs_ratio_max = 0.0;       // over L, q
    double divisible_ratio_max = 0.0;  // over L, m >= 1
};

bs_scan_result bs_scan(u32 base, u32 lmax, u64 qmax, u32 threads) {
    bs_scan_result out;
    size_t hist_size = 0;
    std::vector<size_t> offsets(qmax + 1, 0);
    for (u64 q = 1; q <= qmax; ++q) {
        offsets[q] = hist_size;
        hist_size += q;
    }
    for (u32 L = 1; L <= lmax; ++L) {
        u64 vlo = pal_half_lo(base, L), vhi = pal_half_hi(base, L);
        u64 span = vhi - vlo;
        u32 tasks = threads > 1 ? threads * 4 : 1;
        std::vector<std::vector<u64>> hist_part(tasks);
        std::vector<std::vector<u64>> div_part(tasks);
        parallel_for(tasks, threads, [&](u64 t) {
            std::vector<u64> hist(hist_size, 0);
            std::vector<u64> divc(qmax + 1, 0);
            u64 a0 = vlo + span * t / tasks;
            u64 a1 = vlo + span * (t + 1) / tasks;
            pal_block_segment(base, L, a0, a1, [&](u64 p) {
                bool coprime = std::gcd(p, (u64)base) == 1;
                for (u64 q = 1; q <= qmax; ++q) {
                    u64 r = p % q;
                    if (coprime) ++hist[offsets[q] + r];
                    if (r == 0) ++divc[q];
                }
            });
            hist_part[t] = std::move(hist);
            div_part[t] = std::move(divc);
        });
        std::vector<u64> hist(hist_size, 0), divc(qmax + 1, 0);
        for (u32 t = 0; t < tasks; ++t) {
            for (size_t i = 0; i < hist_size; ++i) hist[i] += hist_part[t][i];
            for (u64 m = 1; m <= qmax; ++m) divc[m] += div_part[t][m];
        }
        double block = (double)pal_block_size(base, L);
        for (u64 q = 1; q <= qmax; ++q) {
            u64 best = 0;
            for (u64 r = 0; r < q; ++r) best = std::max(best, hist[offsets[q] + r]);
            double ratio = (double)best / (block / std::sqrt((double)q) + 1.0);
            out.bs_ratio_max = std::max(out.bs_ratio_max, ratio);
            double div_ratio = (double)divc[q] * std::sqrt((double)q) / block;
            out.divisible_ratio_max = std::max(out.divisible_ratio_max, div_ratio);
        }
    }
    return out;
}

std::string bs_grid_hash(u32 base, u32 lmax, u64 qmax) {
    return hex64(fnv1a("bs:b=" + std::to_string(base) + ";L<=" + std::to_string(lmax) +
                       ";q<=" + std::to_string(qmax)));
}

const std::vector<u64> kPStarGrid = {100,      1000,      10000,     100000,
                                     1000000,  10000000,  100000000};

std::pair<double, double> measure_pstar(u32 base) {
    double lo = 1e300, hi = 0.0;
    for (u64 y : kPStarGrid) {
        double ratio = (double)count_upto(base, y, pal_variant::star) / std::sqrt((double)y);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

std::string pstar_grid_hash(u32 base) {
    return hex64(fnv1a("pstar:b=" + std::to_string(base) + ";y=100..1e8 decades"));
}

const std::vector<u64> kTwistedQ = {1, 3, 8, 25, 49, 121, 243, 500, 729, 961};
const std::vector<u64> kTwistedN = {10, 100, 1000, 10000};

measured measure_twisted(u64 seed) {
    rng64 rng(seed ^ 0x7715edull);
    const double alphas[4] = {0.0, 0.3, 0.6180339887498949, rng.uniform()};
    double worst = 0.0;
    for (u64 q : kTwistedQ) {
        for (i64 a : {1, 7}) {
            if (std::gcd((u64)a, q) != 1) continue;
            for (i64 c : {0, 1, 5}) {
                for (double alpha : alphas) {
                    for (u64 N : kTwistedN) {
                        auto r = twisted_incomplete_k2(alpha, a, c, q, N, 1e300, 0.1);
                        double denom =
                            std::pow((double)q, 0.1) * std::min(r.bound1, r.bound2);
                        worst = std::max(worst, r.value / denom);
                    }
                }
            }
        }
    }
    return {worst, hex64(fnv1a("twisted:q10xN4xa2xc3xalpha4;eps=0.1;seed=" +
                               std::to_string(seed)))};
}

measured measure_shparlinski() {
    const std::pair<int, int> exps[] = {{1, 2}, {-2, 1}, {3, 2}, {-1, 2}, {-2, -1}, {3, -2}};
    double worst = 0.0;
    for (u64 q = 1; q <= 200; q = q < 50 ? q + 1 : q + 10) {
        for (auto [k, l] : exps)
            for (i64 c : {0, 1, 2, 3, 5})
                for (i64 d : {0, 1, 2, 3, 5})
                    worst = std::max(worst, shparlinski_ratio(c, d, k, l, q));
    }
    return {worst, hex64(fnv1a("shparlinski:q<=200;exps=6;c,d in {0,1,2,3,5}"))};
}

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

check_result check_pal_enum(const verify_options& opt) {
    u64 xmax = pick(opt.xmax, 100000);
    failure_note note;
    u64 cases = 0;
    for (u32 b : {2, 3, 10}) {
        auto naive = oracle::naive_pal_set(b, xmax);
        std::vector<u64> fast;
        for_each_pal_upto(b, xmax, [&](u64 p) { fast.push_back(p); });
        if (fast != naive)
            note.record("set mismatch at base " + std::to_string(b));
        if (fast.size() != count_upto(b, xmax, pal_variant::all))
            note.record("count_upto mismatch at base " + std::to_string(b));
        cases += naive.size();
    }
    return {"pal-enum", !note.failed, cases,
            note.failed ? note.text : "fast vs naive sets identical, b in {2,3,10}, x <= " +
                                          std::to_string(xmax)};
}

check_result check_squarefree(const verify_options& opt) {
    u64 nmax = pick(opt.nmax, 1000000);
    u32 tasks = opt.threads > 1 ? opt.threads * 4 : 1;
    std::vector<u64> bad(tasks, 0);
    parallel_for(tasks, opt.threads, [&](u64 t) {
        u64 lo = 1 + nmax * t / tasks, hi = nmax * (t + 1) / tasks;
        for (u64 n = lo; n <= hi; ++n)
            if (is_squarefree(n) != oracle::naive_squarefree(n)) {
                bad[t] = n;
                break;
            }
    });
    u64 first_bad = 0;
    for (u64 b : bad)
        if (b) first_bad = first_bad ? std::min(first_bad, b) : b;
    return {"squarefree", first_bad == 0, nmax,
            first_bad ? "mismatch at n = " + std::to_string(first_bad)
                      : "is_squarefree = mu^2 oracle for n <= " + std::to_string(nmax)};
}

check_result check_rho(const verify_options& opt) {
    failure_note note;
    u64 cases = 0;
    u32 lmax = (u32)pick(opt.lmax, 6);
    for (u32 b : {2, 3, 10}) {
        for (u32 L = 0; L <= lmax; ++L) {
            u64 window = checked_pow(b, L + 1);
            std::vector<bool> seen(window, false);
            std::vector<u64> powers(L + 2);
            powers[0] = 1;
            for (u32 j = 1; j <= L + 1; ++j) powers[j] = powers[j - 1] * b;
            for (u64 n = 0; n < window; ++n) {
                u64 r = reverse_digits(n, b, L);
                ++cases;
                if (r >= window) note.record("range violation");
                if (seen[r]) note.record("bijection violated");
                seen[r] = true;
                if (reverse_digits(r, b, L) != n) note.record("involution violated");
                for (u32 l = 0; l <= L; ++l) {
                    if (n <= powers[l] && r % powers[L - l] != 0)
                        note.record("property B violated");
                    if (n % powers[l] == 0 && r >= powers[L + 1 - l])
                        note.record("property C violated");
                }
                if (n % b != 0 && r < powers[L]) note.record("property E violated");
                if (note.failed) break;
            }
            if (note.failed) break;
        }
    }
    // additivity under carry-free addition
    for (u32 b : {2, 3}) {
        for (u32 L = 0; L <= 5 && !note.failed; ++L) {
            u64 window = checked_pow(b, L + 1);
            for (u64 m = 0; m < window && !note.failed; ++m)
                for (u64 n = 0; n < window; ++n) {
                    u64 mm = m, nn = n;
                    bool carry_free = true;
                    while (mm || nn) {
                        if (mm % b + nn % b >= b) {
                            carry_free = false;
                            break;
                        }
                        mm /= b;
                        nn /= b;
                    }
                    if (!carry_free) continue;
                    ++cases;
                    if (reverse_digits(m + n, b, L) !=
                        reverse_digits(m, b, L) + reverse_digits(n, b, L)) {
                        note.record("carry-free additivity violated at (" + std::to_string(m) +
                                    "," + std::to_string(n) + ")");
                        break;
                    }
                }
        }
    }
    return {"rho", !note.failed, cases,
            note.failed ? note.text : "reversal bijection/involution/divisibility/additivity, exhaustive"};
}

check_result check_quasi_cover(const verify_options& opt) {
    failure_note note;
    u64 cases = 0;
    u32 lmax = (u32)pick(opt.lmax, 8);
    for (u32 b : {2, 10}) {
        for (u32 L = 2; L <= lmax; ++L) {
            u32 max_level = L / 2;
            auto brute = oracle::naive_quasi_counts(b, L, max_level, opt.threads);
            for (u32 level = 1; level <= max_level; ++level) {
                quasi_cover_iter it(b, L, level);
                u64 lo = checked_pow(b, L), hi = checked_pow(b, L + 1);
                u64 emitted = 0, prev = 0;
                bool first = true;
                quasi_cover_triple tr;
                bool ok = true;
                while (it.next(tr)) {
                    ++emitted;
                    if (tr.value != tr.skeleton + checked_pow(b, level) * tr.offset) ok = false;
                    if (tr.value < lo || tr.value >= hi) ok = false;
                    if (!first && tr.value <= prev) ok = false;
                    if (std::gcd(tr.value % b, (u64)b) != 1) ok = false;
                    if (!is_quasi_palindrome(tr.value, b, level)) ok = false;
                    if (!ok) break;
                    prev = tr.value;
                    first = false;
                }
                cases += emitted;
                if (!ok)
                    note.record("emitted value fails filter at b=" + std::to_string(b) +
                                " L=" + std::to_string(L) + " level=" + std::to_string(level));
                else if (emitted != brute[level - 1])
                    note.record("cardinality mismatch at b=" + std::to_string(b) +
                                " L=" + std::to_string(L) + " level=" + std::to_string(level) +
                                ": emitted " + std::to_string(emitted) + " brute " +
                                std::to_string(brute[level - 1]));
                // skeleton cardinality phi(b) * b^(level-1)
                u64 expect = (u64)euler_phi(b) * checked_pow(b, level - 1);
                if (gen_quasi_skeleton(b, L, level).members.size() != expect)
                    note.record("skeleton cardinality mismatch");
            }
        }
    }
    return {"quasi-cover", !note.failed, cases,
            note.failed ? note.text
                        : "cover stream = brute digit filter (ascending, exact counts)"};
}

check_result check_salie(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 50);
    std::vector<u8> fails(qmax + 1, 0);
    std::vector<u64> counts(qmax + 1, 0);
    parallel_for(qmax, opt.threads, [&](u64 qi) {
        u64 q = qi + 1;
        for (i64 c = 0; c < (i64)q; ++c)
            for (i64 d = 0; d < (i64)q; ++d) {
                ++counts[q];
                if (!k2_salie_check(c, d, q).agree) {
                    fails[q] = 1;
                    return;
                }
            }
    });
    u64 cases = 0, badq = 0;
    for (u64 q = 1; q <= qmax; ++q) {
        cases += counts[q];
        if (fails[q] && !badq) badq = q;
    }
    return {"salie", badq == 0, cases,
            badq ? "Salie identity fails at q = " + std::to_string(badq)
                 : "K2(c,d;q^2) matches the root-of-congruence form, q <= " + std::to_string(qmax)};
}

check_result check_k2_crt(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 40);
    failure_note note;
    u64 cases = 0;
    const i64 vals[] = {0, 1, 2, 5, 7};
    for (u64 q = 1; q <= qmax; ++q)
        for (u64 r = q; r <= qmax; ++r) {
            if (std::gcd(q, r) != 1) continue;
            for (i64 c : vals)
                for (i64 d : vals) {
                    ++cases;
                    auto chk = k2_crt_check(c, d, q, r);
                    if (!chk.agree)
                        note.record("CRT split fails at (c,d,q,r)=(" + std::to_string(c) + "," +
                                    std::to_string(d) + "," + std::to_string(q) + "," +
                                    std::to_string(r) + ")");
                }
        }
    return {"k2-crt", !note.failed, cases,
            note.failed ? note.text : "K2 multiplicativity on coprime moduli <= " + std::to_string(qmax)};
}

check_result check_k2_correlation(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 60);
    std::vector<u8> fails(qmax + 1, 0);
    parallel_for(qmax, opt.threads, [&](u64 qi) {
        u64 q = qi + 1;
        for (i64 c = 0; c < (i64)q; ++c)
            for (i64 d = 0; d < (i64)q; ++d) {
                auto r = correlation_check(c, d, q);
                if (!r.identity_ok || !r.bound_ok) {
                    fails[q] = 1;
                    return;
                }
            }
    });
    u64 cases = 0, badq = 0;
    for (u64 q = 1; q <= qmax; ++q) {
        cases += q * q;
        if (fails[q] && !badq) badq = q;
    }
    return {"k2-correlation", badq == 0, cases,
            badq ? "correlation identity/bound fails at q = " + std::to_string(badq)
                 : "Ramanujan-sum identity and gcd*tau bound, q <= " + std::to_string(qmax)};
}

check_result check_gauss_vanishing(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 200);
    failure_note note;
    u64 cases = 0;
    for (u64 q = 1; q <= qmax; ++q) {
        u64 odd = q;
        u32 two_exp = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++two_exp;
        }
        bool forced = two_exp >= 4 || !is_squarefree(odd);
        if (!forced) continue;
        for (u64 a = 0; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            ++cases;
            double mag = std::abs(gauss_star((i64)a, q).value);
            if (mag > 1e-6) {
                note.record("G*(" + std::to_string(a) + ";" + std::to_string(q) +
                            ") = " + fmt(mag) + " did not vanish");
                break;
            }
        }
        if (note.failed) break;
    }
    return {"gauss-vanishing", !note.failed, cases,
            note.failed ? note.text
                        : "G*(a;q) vanishes whenever 16 | q or odd(q) non-squarefree, q <= " +
                              std::to_string(qmax)};
}

check_result check_phi_moment(const verify_options&) {
    failure_note note;
    u64 cases = 0;
    if (phi_moment_exact(2, 2, 2) != 6) note.record("moment (2,2,2) != 6");
    for (u32 b : {2, 3})
        for (u32 N = 1; N <= 4; ++N)
            for (u32 K = 1; K <= 3; ++K) {
                ++cases;
                u64 exact = phi_moment_exact(b, N, K);
                double quad = oracle::quad_moment(b, N, K);
                if (std::abs((double)exact - quad) > 1e-6 * std::max(1.0, (double)exact))
                    note.record("moment mismatch at (b,N,K)=(" + std::to_string(b) + "," +
                                std::to_string(N) + "," + std::to_string(K) + "): exact " +
                                std::to_string(exact) + " quad " + fmt(quad));
            }
    return {"phi-moment", !note.failed, cases,
            note.failed ? note.text : "lattice count = quadrature (rel 1e-6), b in {2,3}, N<=4, K<=3"};
}

check_result check_shift_identity(const verify_options& opt) {
    rng64 rng(pick(opt.seed, kDefaultSeed) ^ 0x5317f7ull);
    failure_note note;
    u64 cases = 0;
    for (u64 q : {3, 5, 7, 11})
        for (u32 b : {2, 10})
            for (u32 N = 0; N <= 5; ++N)
                for (u32 M = 0; M <= N; ++M)
                    for (double delta : {1.0, 2.0}) {
                        double beta = rng.uniform();
                        ++cases;
                        auto r = algebraic_shift_check(q, b, beta, M, N, delta);
                        if (!r.agree)
                            note.record("shift identity fails at q=" + std::to_string(q) +
                                        " b=" + std::to_string(b) + " M=" + std::to_string(M) +
                                        " N=" + std::to_string(N) + " delta=" + fmt(delta));
                    }
    return {"shift-identity", !note.failed, cases,
            note.failed ? note.text : "unit-class shift identity, q in {3,5,7,11}, M<=N<=5"};
}

check_result check_pal_sum_bounds(const verify_options& opt) {
    u64 trials = pick(opt.trials, 200);
    rng64 rng(pick(opt.seed, kDefaultSeed) ^ 0xa1f4ull);
    failure_note note;
    u64 cases = 0;
    for (u64 t = 0; t < trials; ++t) {
        double alpha = rng.uniform();
        for (u32 b : {2, 10}) {
            for (u32 N = 1; pow_at_most(b, 2 * N + 1, 1000000); ++N) {
                ++cases;
                auto r = pal_exp_sum_check(alpha, b, N);
                if (!r.holds)
                    note.record("sum-to-product fails at alpha=" + fmt(alpha) + " b=" +
                                std::to_string(b) + " N=" + std::to_string(N));
            }
            for (u64 x : {1000ull, 1000000ull}) {
                ++cases;
                auto r = incomplete_sum_check(alpha, b, x);
                if (!r.holds)
                    note.record("incomplete-sum bound fails at alpha=" + fmt(alpha) + " b=" +
                                std::to_string(b) + " x=" + std::to_string(x));
            }
        }
        if (note.failed) break;
    }
    return {"pal-sum-bounds", !note.failed, cases,
            note.failed ? note.text
                        : std::to_string(trials) + " seeded alphas, blocks to 1e6, x to 1e6"};
}

check_result check_vdc(const verify_options& opt) {
    u64 trials = pick(opt.trials, 100);
    u64 seed = pick(opt.seed, kDefaultSeed);
    std::vector<u8> fail(trials, 0);
    parallel_for(trials, opt.threads, [&](u64 t) {
        rng64 rng(seed ^ (0xdc0ull + t * 0x9e37ull));
        u64 N = 1 + rng.below(200);
        std::vector<cplx> z(N);
        for (auto& v : z) {
            double ang = 2.0 * 3.14159265358979323846 * rng.uniform();
            v = {std::cos(ang), std::sin(ang)};
        }
        for (u64 H = 1; H <= N; ++H)
            if (!oracle::vdc_check(z, H).holds) {
                fail[t] = 1;
                return;
            }
    });
    u64 bad = 0, cases = 0;
    for (u64 t = 0; t < trials; ++t) {
        cases += 1;
        if (fail[t] && !bad) bad = t + 1;
    }
    return {"vdc", bad == 0, cases,
            bad ? "van der Corput inequality fails on sequence " + std::to_string(bad)
                : std::to_string(trials) + " seeded sequences, N <= 200, all H <= N"};
}

check_result check_cong_gcd(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 60);
    std::vector<u8> fails(qmax + 1, 0);
    parallel_for(qmax, opt.threads, [&](u64 qi) {
        u64 q = qi + 1;
        for (u64 M = 1; M <= 50; ++M)
            for (u64 N = 1; N <= 50; ++N)
                if (!oracle::cong_bound_check(M, N, q).holds) {
                    fails[q] = 1;
                    return;
                }
    });
    failure_note note;
    for (u64 q = 1; q <= qmax; ++q)
        if (fails[q]) note.record("cong bound fails at q = " + std::to_string(q));
    u64 cases = 50 * 50 * qmax;
    for (u64 q = 1; q <= 300 && !note.failed; ++q)
        for (u64 N = 1; N <= 300; ++N) {
            ++cases;
            if (!gcd_sum_check(N, q).holds) {
                note.record("gcd-sum bound fails at (N,q)=(" + std::to_string(N) + "," +
                            std::to_string(q) + ")");
                break;
            }
        }
    return {"cong-gcd", !note.failed, cases,
            note.failed ? note.text : "congruence and gcd-sum bounds exact on full grids"};
}

check_result check_sieve_regression(const verify_options& opt) {
    if (opt.baseline_path.empty())
        return {"sieve-regression", false, 0, "no baseline file given (--baseline PATH)"};
    baseline_store store = baseline_store::load(opt.baseline_path);
    u64 seed = pick(opt.seed, kDefaultSeed);
    measured sp = measure_spacing_ratio();
    measured qf = measure_quadform_ratio(seed);
    const baseline_entry& sp_base = store.require("spacing_sup_ratio", sp.grid_hash);
    const baseline_entry& qf_base = store.require("ls_quadratic_ratio", qf.grid_hash);
    bool ok_sp = sp.value <= sp_base.constant * (1.0 + 1e-12);
    bool ok_qf = qf.value <= qf_base.constant * (1.0 + 1e-12);
    std::string detail = "spacing ratio " + fmt(sp.value) + " (frozen " + fmt(sp_base.constant) +
                         "), quadratic-form ratio " + fmt(qf.value) + " (frozen " +
                         fmt(qf_base.constant) + ")";
    return {"sieve-regression", ok_sp && ok_qf, kSieveGrid.size() * kSieveGrid.size() * kSieveGrid.size(),
            detail};
}

check_result check_bs_ratio(const verify_options& opt) {
    if (opt.baseline_path.empty())
        return {"bs-ratio", false, 0, "no baseline file given (--baseline PATH)"};
    baseline_store store = baseline_store::load(opt.baseline_path);
    u32 lmax = (u32)pick(opt.lmax, 10);
    u64 qmax = pick(opt.qmax, 500);
    bs_scan_result scan = bs_scan(10, lmax, qmax, opt.threads);
    std::string grid = bs_grid_hash(10, lmax, qmax);
    const baseline_entry& bs_base = store.require("bs_max_ratio", grid);
    const baseline_entry& div_base = store.require("count_divisible_ratio", grid);
    bool ok_bs = scan.bs_ratio_max <= bs_base.constant * (1.0 + 1e-12);
    bool ok_div = scan.divisible_ratio_max <= div_base.constant * (1.0 + 1e-12);
    std::string detail = "AP ratio " + fmt(scan.bs_ratio_max) + " (frozen " +
                         fmt(bs_base.constant) + "), divisible ratio " +
                         fmt(scan.divisible_ratio_max) + " (frozen " + fmt(div_base.constant) + ")";
    return {"bs-ratio", ok_bs && ok_div, lmax * qmax, detail};
}

check_result check_square_pairs(const verify_options& opt) {
    failure_note note;
    u64 cases = 0;
    // exact oracle agreement on small blocks
    for (u32 b : {2, 10}) {
        for (u32 L = 1; L <= 5; ++L) {
            // literal naive palindrome list for the block
            std::vector<u64> naive_block;
            u64 lo = checked_pow(b, L), hi = checked_pow(b, L + 1);
            for (u64 n = lo; n < hi; ++n) {
                u64 m = n, rev = 0;
                while (m) {
                    rev = rev * b + m % b;
                    m /= b;
                }
                if (rev == n) naive_block.push_back(n);
            }
            for (u64 q : {1, 3, 7})
                for (i64 a = 0; a < (i64)q; ++a)
                    for (u64 N = 1; N <= 8; ++N) {
                        ++cases;
                        u64 naive = 0;
                        for (u64 n = N / 2 + 1; n <= N; ++n)
                            for (u64 l : naive_block)
                                if (l % q == (u64)a && std::gcd(l, (u64)b) == 1 &&
                                    l % (n * n) == 0)
                                    ++naive;
                        u64 fast = count_square_pairs(b, L, q, a, N, opt.threads);
                        if (fast != naive)
                            note.record("pair count mismatch at (b,L,q,a,N)=(" +
                                        std::to_string(b) + "," + std::to_string(L) + "," +
                                        std::to_string(q) + "," + std::to_string(a) + "," +
                                        std::to_string(N) + "): fast " + std::to_string(fast) +
                                        " naive " + std::to_string(naive));
                    }
        }
    }
    // dyadic profile at scale: counts must be non-increasing from N = 10
    std::string profile_detail;
    {
        std::vector<u64> windows;
        for (u64 N = 10; N <= 400000; N *= 2) windows.push_back(N);
        auto counts = square_pair_profile(10, 10, 1, 0, windows, opt.threads);
        double block = (double)pal_block_size(10, 10);
        double worst_ratio = 0.0;
        for (size_t i = 0; i < windows.size(); ++i) {
            if (i > 0 && counts[i] > counts[i - 1])
                note.record("dyadic counts increase at N=" + std::to_string(windows[i]) + " (" +
                            std::to_string(counts[i - 1]) + " -> " + std::to_string(counts[i]) +
                            ")");
            double ratio = (double)counts[i] / (block * std::pow((double)windows[i], -3.0 / 16.0));
            worst_ratio = std::max(worst_ratio, ratio);
        }
        cases += windows.size();
        profile_detail = "; dyadic profile b=10 L=10: max count/(|Pi| N^-3/16) = " + fmt(worst_ratio);
    }
    return {"square-pairs", !note.failed, cases,
            note.failed ? note.text : "fast = literal double loop on grid" + profile_detail};
}

check_result check_equidist_trend(const verify_options& opt) {
    experiment_config cfg;
    cfg.base = 10;
    cfg.scales = {1000000ull, 10000000000ull};
    if (opt.xmax && opt.xmax < cfg.scales.back()) cfg.scales.back() = opt.xmax;
    cfg.moduli = {7, 13, 17, 19};
    cfg.threads = opt.threads;
    cfg.seed = pick(opt.seed, kDefaultSeed);
    auto t0 = std::chrono::steady_clock::now();
    experiment_report rep = run_experiment(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failure_note note;
    if (rep.max_rel_err_by_scale.size() != 2) note.record("expected two scales");
    double lo = rep.max_rel_err_by_scale.front().second;
    double hi_scale = rep.max_rel_err_by_scale.back().second;
    if (!(hi_scale < lo))
        note.record("relative discrepancy did not shrink: " + fmt(lo) + " at x=1e6 vs " +
                    fmt(hi_scale) + " at x=" + std::to_string(cfg.scales.back()));
    for (auto [x, rel] : rep.max_rel_err_by_scale) {
        (void)rel;
        double max_abs = 0.0;
        for (auto& row : rep.rows)
            if (row.x == x) max_abs = std::max(max_abs, row.abs_err);
        double sigma = max_abs > 0
                           ? -std::log(max_abs / std::sqrt((double)x)) / std::sqrt(std::log((double)x))
                           : 1e9;
        if (!(sigma > 0)) note.record("fitted sigma <= 0 at x=" + std::to_string(x));
    }
    if (secs > 600.0) note.record("run exceeded 10 minutes");
    return {"equidist-trend", !note.failed, rep.rows.size(),
            note.failed ? note.text
                        : "max rel err " + fmt(lo) + " (x=1e6) -> " + fmt(hi_scale) + " (x=" +
                              std::to_string(cfg.scales.back()) + "), " + fmt(secs) + " s"};
}

check_result check_determinism(const verify_options& opt) {
    experiment_config cfg;
    cfg.base = 10;
    cfg.scales = {1000000ull};
    cfg.moduli = {7, 13};
    cfg.seed = pick(opt.seed, kDefaultSeed);
    std::string first;
    for (u32 threads : {1u, 4u, 8u}) {
        cfg.threads = threads;
        std::string csv = report_to_csv(run_experiment(cfg));
        if (first.empty())
            first = csv;
        else if (csv != first)
            return {"determinism", false, 3,
                    "CSV differs between 1 and " + std::to_string(threads) + " threads"};
    }
    return {"determinism", true, 3, "CSV byte-identical across 1/4/8 threads"};
}

check_result check_ramanujan(const verify_options& opt) {
    u64 qmax = pick(opt.qmax, 100);
    failure_note note;
    u64 cases = 0;
    for (u64 q = 1; q <= qmax; ++q)
        for (i64 n = 0; n < (i64)q; ++n) {
            ++cases;
            cplx direct = oracle::naive_ramanujan_c(q, n);
            if (std::abs(direct.imag()) > 1e-9 ||
                std::abs(direct.real() - (double)ramanujan_c(q, n)) > 1e-9) {
                note.record("c_q(n) mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n));
                break;
            }
        }
    for (u64 q = 1; q <= 50 && !note.failed; ++q)
        if (ramanujan_c(q, 1) != mobius(q)) note.record("c_q(1) != mu(q) at q=" + std::to_string(q));
    return {"ramanujan", !note.failed, cases,
            note.failed ? note.text : "closed form = direct summation, q <= " + std::to_string(qmax)};
}

check_result check_arith_identities(const verify_options&) {
    failure_note note;
    u64 cases = 0;
    for (u64 m = 1; m <= 50; ++m)
        for (u64 n = m + 1; n <= 50; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++cases;
            if (!bezout_check(m, n).holds)
                note.record("Bezout identity fails at (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
        }
    for (u64 q1 = 1; q1 <= 12 && !note.failed; ++q1)
        for (u64 q2 = 1; q2 <= 12; ++q2) {
            if (std::gcd(q1, q2) != 1) continue;
            for (i64 a1 = 0; a1 < (i64)q1; ++a1)
                for (i64 a2 = 0; a2 < (i64)q2; ++a2) {
                    ++cases;
                    u64 x = crt_combine(a1, q1, a2, q2);
                    if (x >= q1 * q2 || (i64)(x % q1) != a1 || (i64)(x % q2) != a2)
                        note.record("CRT result wrong");
                }
        }
    for (u64 m = 1; m <= 200 && !note.failed; ++m)
        for (u64 n = 1; n <= 200; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++cases;
            if (!(singular_series(m * n) == rat_mul(singular_series(m), singular_series(n)))) {
                note.record("singular series not multiplicative at (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
                break;
            }
        }
    // Euler tail: |sum_{d<=D,(d,k)=1} mu(d)/d^2 - 6/pi^2 S(k)| <= 1/D
    for (u64 k : {1ull, 990ull}) {
        kahan partial;
        const double pi = 3.14159265358979323846;
        double target = 6.0 / (pi * pi) * rat_to_double(singular_series(k));
        for (u64 d = 1; d <= 10000; ++d) {
            if (std::gcd(d, k) == 1) {
                int mu = mobius(d);
                if (mu) partial.add((double)mu / ((double)d * (double)d));
            }
            if (d >= 2) {
                ++cases;
                if (std::abs(partial.sum - target) > 1.0 / (double)d) {
                    note.record("Euler tail bound fails at k=" + std::to_string(k) +
                                " D=" + std::to_string(d));
                    break;
                }
            }
        }
    }
    return {"arith-identities", !note.failed, cases,
            note.failed ? note.text : "Bezout/CRT/multiplicativity/Euler-tail all exact"};
}

check_result check_pal_counts(const verify_options& opt) {
    failure_note note;
    u64 cases = 0;
    // closed form vs enumeration
    struct cell {
        u32 b, L;
    };
    std::vector<cell> cells;
    for (u32 b = 2; b <= 12; ++b)
        for (u32 L = 0; L <= 12; ++L)
            if (pow_at_most(b, L + 1, kMaxWidth)) cells.push_back({b, L});
    std::vector<u8> bad(cells.size(), 0);
    parallel_for(cells.size(), opt.threads, [&](u64 i) {
        auto [b, L] = cells[i];
        u64 counted = 0;
        pal_block_segment(b, L, pal_half_lo(b, L), pal_half_hi(b, L), [&](u64) { ++counted; });
        if (counted != pal_block_size(b, L)) bad[i] = 1;
    });
    for (size_t i = 0; i < cells.size(); ++i) {
        ++cases;
        if (bad[i])
            note.record("block size formula fails at b=" + std::to_string(cells[i].b) +
                        " L=" + std::to_string(cells[i].L));
    }
    // partition identity: sum of AP counts = coprime-filtered block count
    for (u32 b : {2, 10})
        for (u32 L = 0; L <= 8 && !note.failed; ++L)
            for (u64 q = 1; q <= 30; ++q) {
                ++cases;
                auto hist = ap_histogram(b, L, q, true, opt.threads);
                u64 total = 0;
                for (u64 c : hist) total += c;
                u64 expect = 0;
                pal_block_segment(b, L, pal_half_lo(b, L), pal_half_hi(b, L), [&](u64 p) {
                    if (std::gcd(p, (u64)b) == 1) ++expect;
                });
                if (total != expect) {
                    note.record("partition identity fails at b=" + std::to_string(b) +
                                " L=" + std::to_string(L) + " q=" + std::to_string(q));
                    break;
                }
            }
    // block difference through count_upto
    for (u32 b : {2, 3, 10})
        for (u32 L = 0; L <= 10 && !note.failed; ++L) {
            ++cases;
            u64 hi = checked_pow(b, L + 1) - 1;
            u64 lo = checked_pow(b, L) - 1;
            if (count_upto(b, hi, pal_variant::all) - count_upto(b, lo, pal_variant::all) !=
                pal_block_size(b, L))
                note.record("block difference fails at b=" + std::to_string(b) +
                            " L=" + std::to_string(L));
        }
    return {"pal-counts", !note.failed, cases,
            note.failed ? note.text : "closed forms, partition and block-difference identities"};
}

check_result check_pstar_growth(const verify_options& opt) {
    if (opt.baseline_path.empty())
        return {"pstar-growth", false, 0, "no baseline file given (--baseline PATH)"};
    baseline_store store = baseline_store::load(opt.baseline_path);
    failure_note note;
    u64 cases = 0;
    for (u32 b : {2, 10}) {
        auto [lo, hi] = measure_pstar(b);
        std::string tag = "pstar_b" + std::to_string(b);
        const baseline_entry& elo = store.require(tag + "_lo", pstar_grid_hash(b));
        const baseline_entry& ehi = store.require(tag + "_hi", pstar_grid_hash(b));
        cases += kPStarGrid.size();
        if (lo < elo.constant * (1.0 - 1e-12) || hi > ehi.constant * (1.0 + 1e-12))
            note.record("P*_" + std::to_string(b) + " growth outside frozen band [" +
                        fmt(elo.constant) + ", " + fmt(ehi.constant) + "]: [" + fmt(lo) + ", " +
                        fmt(hi) + "]");
    }
    return {"pstar-growth", !note.failed, cases,
            note.failed ? note.text : "|P*_b(y)|/sqrt(y) within frozen bands, b in {2,10}"};
}

check_result check_twisted_k2(const verify_options& opt) {
    if (opt.baseline_path.empty())
        return {"twisted-k2", false, 0, "no baseline file given (--baseline PATH)"};
    baseline_store store = baseline_store::load(opt.baseline_path);
    u64 seed = pick(opt.seed, kDefaultSeed);
    measured m = measure_twisted(seed);
    const baseline_entry& e = store.require("twisted_k2_constant", m.grid_hash);
    bool ok = m.value <= e.constant * (1.0 + 1e-12);
    return {"twisted-k2", ok, kTwistedQ.size() * kTwistedN.size() * 24,
            "max value/(q^" + fmt(e.epsilon) + " min(N, sqrt q + N/sqrt q)) = " + fmt(m.value) +
                " (frozen " + fmt(e.constant) + ")"};
}

check_result check_shparlinski(const verify_options& opt) {
    if (opt.baseline_path.empty())
        return {"shparlinski", false, 0, "no baseline file given (--baseline PATH)"};
    baseline_store store = baseline_store::load(opt.baseline_path);
    measured m = measure_shparlinski();
    const baseline_entry& e = store.require("shparlinski_ratio", m.grid_hash);
    bool ok = m.value <= e.constant * (1.0 + 1e-12);
    return {"shparlinski", ok, 0,
            "max |S|/sqrt(q gcd(c,d,q)) = " + fmt(m.value) + " (frozen " + fmt(e.constant) + ")"};
}

using check_fn = check_result (*)(const verify_options&);

struct registry_row {
    check_info info;
    check_fn fn;
};

const std::vector<registry_row>& registry() {
    static const std::vector<registry_row> rows = {
        {{"pal-enum", "palindrome enumeration vs naive string filter", false}, check_pal_enum},
        {{"squarefree", "is_squarefree vs full-factorization oracle", false}, check_squarefree},
        {{"rho", "digit reversal: bijection, divisibility, additivity", false}, check_rho},
        {{"quasi-cover", "quasi-palindrome cover stream = digit filter", false}, check_quasi_cover},
        {{"salie", "Salie reduction for K2 with square moduli", false}, check_salie},
        {{"k2-crt", "K2 multiplicativity across coprime moduli", false}, check_k2_crt},
        {{"k2-correlation", "K2 correlations = Ramanujan sums, with bound", false},
         check_k2_correlation},
        {{"gauss-vanishing", "forced vanishing of coprime Gauss sums", false},
         check_gauss_vanishing},
        {{"phi-moment", "exact phi_big moment vs quadrature", false}, check_phi_moment},
        {{"shift-identity", "unit-class algebraic shift identity", false}, check_shift_identity},
        {{"pal-sum-bounds", "sum-to-product and incomplete-sum bounds", false},
         check_pal_sum_bounds},
        {{"vdc", "van der Corput inequality on random sequences", false}, check_vdc},
        {{"cong-gcd", "congruence-count and gcd-sum bounds", false}, check_cong_gcd},
        {{"sieve-regression", "large-sieve ratios vs frozen baselines", true},
         check_sieve_regression},
        {{"bs-ratio", "progression/divisibility ratios vs frozen baselines", true},
         check_bs_ratio},
        {{"square-pairs", "square-divisor pair counts vs literal loop + dyadic trend", false},
         check_square_pairs},
        {{"equidist-trend", "square-free equidistribution improves with scale", false},
         check_equidist_trend},
        {{"determinism", "experiment CSV identical across thread counts", false},
         check_determinism},
        {{"ramanujan", "Ramanujan sums: closed form vs direct summation", false}, check_ramanujan},
        {{"arith-identities", "Bezout/CRT/singular-series identities", false},
         check_arith_identities},
        {{"pal-counts", "palindrome counting closed forms and partitions", false},
         check_pal_counts},
        {{"pstar-growth", "sqrt-growth band for coprime palindromes", true}, check_pstar_growth},
        {{"twisted-k2", "twisted incomplete K2 sums vs frozen constant", true}, check_twisted_k2},
        {{"shparlinski", "binomial-phase sum ratios vs frozen constant", true},
         check_shparlinski},
    };
    return rows;
}

}  // namespace

const std::vector<check_info>& verify_checks() {
    static const std::vector<check_info> infos = [] {
        std::vector<check_info> v;
        for (const auto& row : registry()) v.push_back(row.info);
        return v;
    }();
    return infos;
}

check_result run_check(const std::string& id, const verify_options& opt) {
    for (const auto& row : registry()) {
        if (row.info.id != id) continue;
        auto t0 = std::chrono::steady_clock::now();
        check_result r = row.fn(opt);
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
        return r;
    }
    throw std::invalid_argument("unknown check '" + id + "'");
}

std::vector<check_result> run_all(const verify_options& opt) {
    std::vector<check_result> out;
    for (const auto& row : registry()) out.push_back(run_check(row.info.id, opt));
    return out;
}

baseline_store compute_baselines(u32 threads, u64 seed) {
    if (seed == 0) seed = kDefaultSeed;
    baseline_store store;
    measured sp = measure_spacing_ratio();
    store.entries["spacing_sup_ratio"] = {sp.value, sp.grid_hash, 0.0,
                                          "max spacing_sup / Delta_0.1 over pinned grid"};
    measured qf = measure_quadform_ratio(seed);
    store.entries["ls_quadratic_ratio"] = {qf.value, qf.grid_hash, 0.0,
                                           "max quadratic form / (Delta_0.1 |gamma|^2)"};
    bs_scan_result scan = bs_scan(10, 10, 500, threads);
    std::string grid = bs_grid_hash(10, 10, 500);
    store.entries["bs_max_ratio"] = {scan.bs_ratio_max, grid, 0.0,
                                     "max_a |Pi(L,q,a)| / (|Pi|/sqrt q + 1)"};
    store.entries["count_divisible_ratio"] = {scan.divisible_ratio_max, grid, 0.0,
                                              "count_divisible * sqrt(m) / |Pi|"};
    for (u32 b : {2, 10}) {
        auto [lo, hi] = measure_pstar(b);
        std::string tag = "pstar_b" + std::to_string(b);
        store.entries[tag + "_lo"] = {lo, pstar_grid_hash(b), 0.0, "min |P*|/sqrt(y)"};
        store.entries[tag + "_hi"] = {hi, pstar_grid_hash(b), 0.0, "max |P*|/sqrt(y)"};
    }
    measured tw = measure_twisted(seed);
    store.entries["twisted_k2_constant"] = {tw.value, tw.grid_hash, 0.1,
                                            "constant C in value <= C q^eps min(bounds)"};
    measured sh = measure_shparlinski();
    store.entries["shparlinski_ratio"] = {sh.value, sh.grid_hash, 0.0,
                                          "max |S| / sqrt(q gcd(c,d,q))"};
    return store;
}

}  // namespace palsieve
