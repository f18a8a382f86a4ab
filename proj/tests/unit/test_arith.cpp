#include "doctest.h"

#include <numeric>

#include "core/arith.hpp"

using namespace palsieve;

TEST_CASE("arithmetic functions") {
    auto one = arithmetic_functions(1);
    CHECK(one.phi == 1);
    CHECK(one.mobius == 1);
    CHECK(one.tau == 1);
    CHECK(one.odd_part == 1);

    auto twelve = arithmetic_functions(12);
    CHECK(twelve.phi == 4);
    CHECK(twelve.mobius == 0);
    CHECK(twelve.tau == 6);
    CHECK(twelve.odd_part == 3);

    auto ten = arithmetic_functions(10);
    CHECK(ten.phi == 4);
    CHECK(ten.mobius == 1);
    CHECK(ten.tau == 4);
    CHECK(ten.odd_part == 5);

    CHECK_THROWS_AS(arithmetic_functions(0), std::domain_error);
}

TEST_CASE("factorization") {
    CHECK(factorize(1).empty());
    factorization f990 = factorize(990);
    REQUIRE(f990.size() == 4);
    CHECK(f990[0].p == 2);
    CHECK(f990[0].e == 1);
    CHECK(f990[1].p == 3);
    CHECK(f990[1].e == 2);
    CHECK(f990[2].p == 5);
    CHECK(f990[3].p == 11);

    factorization semi = factorize(10403);  // 101 * 103, above the cube root
    REQUIRE(semi.size() == 2);
    CHECK(semi[0].p == 101);
    CHECK(semi[1].p == 103);

    // large semiprime forces the rho split
    u64 p = 1000003, q = 1000033;
    factorization big = factorize(p * q);
    REQUIRE(big.size() == 2);
    CHECK(big[0].p == p);
    CHECK(big[1].p == q);

    // prime square cofactor
    factorization sq = factorize(1000003ull * 1000003ull);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].p == 1000003);
    CHECK(sq[0].e == 2);
}

TEST_CASE("squarefree certification") {
    CHECK(is_squarefree(1));
    CHECK_FALSE(is_squarefree(45));
    CHECK(is_squarefree(10));
    CHECK_FALSE(is_squarefree(1000003ull * 1000003ull));
    CHECK(is_squarefree(1000003ull * 1000033ull));
    CHECK(square_part(990) == 3);
    CHECK(square_part(720) == 12);  // 720 = 2^4 3^2 5
}

TEST_CASE("modular inverse and CRT") {
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(3, 10) == 7);
    CHECK(mod_inverse(5, 1) == 0);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);

    CHECK(crt_combine(0, 1, 5, 7) == 5);
    CHECK(crt_combine(2, 3, 3, 5) == 8);
    CHECK_THROWS_AS(crt_combine(1, 6, 1, 4), std::domain_error);

    auto bz = bezout_check(3, 5);
    CHECK(bz.lhs == make_rational(1, 15));
    CHECK(bz.rhs == make_rational(1, 15));  // 2/5 + 2/3 = 16/15 = 1/15 (mod 1)
    CHECK(bz.holds);
}

TEST_CASE("Ramanujan sums") {
    CHECK(ramanujan_c(1, 0) == 1);
    CHECK(ramanujan_c(1, 5) == 1);
    CHECK(ramanujan_c(4, 2) == -2);
    for (u64 q = 1; q <= 50; ++q) CHECK(ramanujan_c(q, 1) == mobius(q));
    // c_q(0) = phi(q)
    for (u64 q = 1; q <= 30; ++q) CHECK(ramanujan_c(q, 0) == (i64)euler_phi(q));
}

TEST_CASE("singular series") {
    CHECK(singular_series(1) == make_rational(1, 1));
    CHECK(singular_series(2) == make_rational(4, 3));
    CHECK(singular_series(990) == make_rational(605, 384));
    // multiplicative on coprime arguments
    CHECK(singular_series(990) == rat_mul(singular_series(9), singular_series(110)));
    // Euler tail bound at a couple of depths
    CHECK(singular_series_tail_gap(1, 100) <= 1.0 / 100);
    CHECK(singular_series_tail_gap(990, 2) <= 1.0 / 2);
}

TEST_CASE("gcd sums") {
    auto r = gcd_sum_check(1, 1);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.holds);
    auto r2 = gcd_sum_check(6, 4);
    CHECK(r2.lhs == 11);
    CHECK(r2.rhs == 18);
    CHECK(r2.holds);
    auto r3 = gcd_sum_check(10, 1);
    CHECK(r3.lhs == 10);
    CHECK(r3.rhs == 10);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    CHECK(is_prime_u64(18446744073709551557ull));
}
