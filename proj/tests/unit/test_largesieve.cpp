#include "doctest.h"

#include <cmath>

#include "core/largesieve.hpp"
#include "core/oracle.hpp"

using namespace palsieve;

TEST_CASE("delta bound") {
    CHECK(delta_bound(1, 1, 1, 0.0) == doctest::Approx(4.0));
    CHECK(delta_bound(2, 4, 3, 0.0) ==
          doctest::Approx((1.0 + 0.75) * (24.0 + 4.0 * std::sqrt(2.0))));
    CHECK(delta_bound(10, 100, 1, 0.1) > 0.0);
}

TEST_CASE("spacing counts") {
    CHECK(spacing_count(1, 1, 1, 0.0) == 1);
    CHECK(spacing_count(1, 10, 4, 0.0) == 0);
    CHECK(spacing_count(2, 10, 1, 0.25) == 10);
    // boundary: distance exactly 1/N is inside the closed window
    CHECK(spacing_count(1, 4, 4, 0.0) == 4);  // 1/4 and 3/4 both at distance 1/4
}

TEST_CASE("spacing sup dominates point counts") {
    for (u64 D : {1ull, 2ull, 3ull})
        for (u64 N : {1ull, 5ull, 10ull})
            for (u64 q : {1ull, 2ull, 5ull}) {
                u64 sup = spacing_sup(D, N, q);
                rng64 rng(17 + D + N + q);
                for (int i = 0; i < 20; ++i)
                    CHECK(sup >= spacing_count(D, N, q, rng.uniform()));
                CHECK(sup >= spacing_count(D, N, q, 0.0));
            }
    // monotone in D
    for (u64 D = 1; D < 6; ++D)
        CHECK(spacing_sup(D + 1, 10, 3) >= spacing_sup(D, 10, 3));
}

TEST_CASE("quadratic form agrees with direct evaluation") {
    CHECK(ls_quadratic_form(std::vector<cplx>(11, cplx(0, 0)), 3, 2).value ==
          doctest::Approx(0.0));
    // D = 1, q = 1: the single class gives |sum gamma|^2
    std::vector<cplx> g{{1, 0}, {0.5, -0.25}, {0, 1}};
    kahan_cplx s;
    for (auto z : g) s.add(z);
    auto r = ls_quadratic_form(g, 1, 1);
    CHECK(r.value == doctest::Approx(std::norm(s.value())));
    // random gammas vs the naive per-class summation
    rng64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        u64 N = 1 + rng.below(6);
        std::vector<cplx> gamma(2 * N + 1);
        for (auto& z : gamma) z = {rng.uniform() * 2 - 1, rng.uniform() * 2 - 1};
        for (u64 D : {1ull, 2ull, 3ull})
            for (u64 q : {1ull, 2ull, 5ull}) {
                auto fast = ls_quadratic_form(gamma, D, q);
                double naive = oracle::naive_ls_quadratic_form(gamma, D, q);
                CHECK(fast.value == doctest::Approx(naive).epsilon(1e-9));
            }
    }
    // monotone in D
    std::vector<cplx> gam(7, cplx(0.3, -0.7));
    double prev = 0;
    for (u64 D = 1; D <= 6; ++D) {
        double v = ls_quadratic_form(gam, D, 2).value;
        CHECK(v >= prev - 1e-9);
        prev = v;
    }
}

TEST_CASE("phi moments over square moduli") {
    // N = 1: every term is 1, so the sum counts units
    double v = phi_moment_square_moduli(2, 1, 1, 3, 2, 0.0);
    CHECK(v == doctest::Approx(2.0 + 4.0));  // phi(3) + phi(12)
    CHECK(phi_moment_square_moduli(2, 2, 1, 1, 1, 0.0) == doctest::Approx(4.0));
    CHECK(phi_moment_square_moduli(2, 2, 2, 3, 2, 0.0) > 0.0);
}
