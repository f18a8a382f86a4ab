#include "doctest.h"

#include <cmath>

#include "core/arith.hpp"
#include "core/expsums.hpp"

using namespace palsieve;

static double dist(cplx a, cplx b) { return std::abs(a - b); }

TEST_CASE("gauss star values") {
    // a = 0: all unit terms are 1
    for (u64 q : {1ull, 2ull, 5ull, 12ull}) {
        auto g = gauss_star(0, q);
        CHECK(dist(g.value, cplx((double)euler_phi(q) / std::sqrt((double)q), 0)) < 1e-12);
    }
    auto g2 = gauss_star(1, 2);
    CHECK(dist(g2.value, cplx(-1.0 / std::sqrt(2.0), 0)) < 1e-12);
    auto g3 = gauss_star(1, 3);
    CHECK(std::abs(std::abs(g3.value) - 2.0 / std::sqrt(3.0)) < 1e-12);
    cplx expected = 2.0 * std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0) / std::sqrt(3.0);
    CHECK(dist(g3.value, expected) < 1e-12);
}

TEST_CASE("gauss star structure") {
    auto r16 = gauss_star_structure_check(1, 16);
    CHECK(r16.vanish_predicted);
    CHECK(r16.vanishes_as_predicted);
    auto r9 = gauss_star_structure_check(1, 9);
    CHECK(r9.vanish_predicted);  // odd part 9 is not squarefree
    CHECK(r9.vanishes_as_predicted);
    auto r2 = gauss_star_structure_check(1, 2);
    CHECK_FALSE(r2.vanish_predicted);
    CHECK(r2.bound_ok);
}

TEST_CASE("quadratic Kloosterman values") {
    CHECK(dist(k2_sum(3, 9, 1).value, cplx(1, 0)) < 1e-15);
    for (u64 q : {2ull, 7ull, 10ull})
        CHECK(dist(k2_sum(0, 0, q).value, cplx((double)euler_phi(q) / std::sqrt((double)q), 0)) <
              1e-12);
    CHECK(std::abs(k2_sum(1, 1, 4).value) < 1e-12);
    // conjugation symmetry
    for (u64 q : {5ull, 8ull, 9ull, 21ull})
        for (i64 c = 0; c < 4; ++c)
            for (i64 d = 0; d < 4; ++d)
                CHECK(dist(k2_sum(-c, -d, q).value, std::conj(k2_sum(c, d, q).value)) < 1e-10);
    // |K2| * sqrt(q) <= phi(q)
    for (u64 q = 1; q <= 30; ++q)
        for (i64 c : {0, 1, 3})
            CHECK(std::abs(k2_sum(c, 2, q).value) * std::sqrt((double)q) <=
                  (double)euler_phi(q) + 1e-9);
}

TEST_CASE("kummer sums") {
    CHECK(dist(kummer2_sum(4, 4, 1).value, cplx(1, 0)) < 1e-15);
    for (u64 s : {3ull, 8ull})
        CHECK(dist(kummer2_sum(0, 0, s).value,
                   cplx((double)euler_phi(s) / std::sqrt((double)s), 0)) < 1e-12);
    CHECK(dist(kummer2_sum(1, 0, 2).value, cplx(-1.0 / std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("CRT multiplicativity") {
    CHECK(k2_crt_check(1, 1, 1, 9).agree);
    CHECK(k2_crt_check(1, 2, 3, 4).agree);
    CHECK(k2_crt_check(5, 7, 9, 25).agree);
    CHECK_THROWS_AS(k2_crt_check(1, 1, 6, 9), std::domain_error);
}

TEST_CASE("Salie identity") {
    auto r = k2_salie_check(1, 2, 3);
    CHECK(r.agree);
    cplx e13 = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
    CHECK(dist(r.lhs, e13) < 1e-12);
    CHECK(k2_salie_check(0, 0, 5).agree);
    CHECK(k2_salie_check(1, 0, 2).agree);
    CHECK(std::abs(k2_salie_check(1, 0, 2).rhs) < 1e-12);
}

TEST_CASE("correlation identity and bound") {
    auto same = correlation_check(3, 3, 12);
    CHECK(same.identity_ok);
    CHECK(same.bound_ok);
    auto r = correlation_check(1, 2, 5);
    CHECK(r.identity_ok);
    CHECK(r.bound == doctest::Approx(2.0));  // gcd(1-4,5) tau(5) = 1*2
    CHECK(r.bound_ok);
    auto r8 = correlation_check(0, 0, 8);
    CHECK(r8.identity_ok);
    CHECK(r8.bound_ok);
}

TEST_CASE("twisted incomplete sums") {
    auto unit = twisted_incomplete_k2(0.0, 1, 0, 1, 25, 1.0, 0.1);
    CHECK(unit.value == doctest::Approx(25.0));  // all K2(.;1) = 1
    CHECK(unit.bound1 == 25.0);
    auto r = twisted_incomplete_k2(0.3, 1, 1, 9, 50, 100.0, 0.1);
    CHECK(r.value >= 0.0);
    CHECK(r.bound2 == doctest::Approx(3.0 + 50.0 / 3.0));
    CHECK(r.ok);
}

TEST_CASE("binomial-phase ratio") {
    // zero phase: phi(q)/q
    for (u64 q : {4ull, 9ull})
        CHECK(shparlinski_ratio(0, 0, 1, 2, q) ==
              doctest::Approx((double)euler_phi(q) / (double)q));
    // (1,1,-2,1;7) is K2(1,1;7) renormalized: sum equals sqrt(7) |K2|
    double ratio = shparlinski_ratio(1, 1, -2, 1, 7);
    CHECK(ratio == doctest::Approx(std::abs(k2_sum(1, 1, 7).value)));
    CHECK(shparlinski_ratio(2, 3, 3, 2, 11) >= 0.0);
    CHECK_THROWS_AS(shparlinski_ratio(1, 1, 2, 2, 7), std::domain_error);
}
