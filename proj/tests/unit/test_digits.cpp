#include "doctest.h"

#include <numeric>

#include "core/digits.hpp"

using namespace palsieve;

TEST_CASE("digit expansion round trips") {
    CHECK(digits_of(0, 10).digits == std::vector<u32>{0});
    CHECK(digits_of(123, 10, 5).digits == std::vector<u32>{3, 2, 1, 0, 0});
    CHECK(digits_of(5, 2).digits == std::vector<u32>{1, 0, 1});
    CHECK_THROWS_AS(digits_of(123, 10, 2), std::out_of_range);

    CHECK(value_of(digits_of(0, 10)) == 0);
    CHECK(value_of({10, {3, 2, 1}}) == 123);
    CHECK(value_of({2, {1, 0, 1}}) == 5);

    rng64 rng(41);
    for (int i = 0; i < 500; ++i) {
        u32 b = 2 + u32(rng.below(14));
        u64 n = rng.below(1000000000000ull);
        CHECK(value_of(digits_of(n, b)) == n);
    }
}

TEST_CASE("digit reversal on a fixed window") {
    CHECK(reverse_digits(0, 10, 4) == 0);
    CHECK(reverse_digits(12321, 10, 4) == 12321);
    CHECK(reverse_digits(123, 10, 4) == 32100);
    CHECK_THROWS_AS(reverse_digits(100000, 10, 4), std::out_of_range);

    // involution everywhere on a couple of small windows
    for (u32 b : {2u, 3u}) {
        u32 L = 4;
        u64 window = checked_pow(b, L + 1);
        for (u64 n = 0; n < window; ++n) CHECK(reverse_digits(reverse_digits(n, b, L), b, L) == n);
    }
}

TEST_CASE("palindrome predicate") {
    CHECK(is_palindrome(7, 10));
    CHECK(is_palindrome(12321, 10));
    CHECK_FALSE(is_palindrome(12, 10));
    CHECK(is_palindrome(5, 2));   // 101
    CHECK_FALSE(is_palindrome(6, 2));  // 110
}

TEST_CASE("quasi-palindrome predicate") {
    CHECK(is_quasi_palindrome(12321, 10, 2));
    CHECK_FALSE(is_quasi_palindrome(12325, 10, 1));
    // palindromes are quasi-palindromes at every level
    for (u64 p : {7ull, 121ull, 12321ull})
        for (u32 level = 1; level <= 4; ++level) CHECK(is_quasi_palindrome(p, 10, level));
    CHECK(is_quasi_palindrome(12023, 10, 1));
    CHECK_FALSE(is_quasi_palindrome(12023, 10, 2));
}

TEST_CASE("quasi skeleton structure") {
    auto sk = gen_quasi_skeleton(10, 10, 1);
    REQUIRE(sk.members.size() == 4);
    u64 w = 1 + checked_pow(10, 10);
    CHECK(sk.members == std::vector<u64>{1 * w, 3 * w, 7 * w, 9 * w});

    auto sk2 = gen_quasi_skeleton(2, 6, 1);
    CHECK(sk2.members == std::vector<u64>{65});

    CHECK(gen_quasi_skeleton(3, 8, 2).members.size() == 6);  // phi(3) * 3
    CHECK_THROWS_AS(gen_quasi_skeleton(10, 10, 6), std::out_of_range);

    // member digit structure: mirrored outer digits, zero middle band
    for (u64 a : gen_quasi_skeleton(10, 6, 2).members) {
        auto dv = digits_of(a, 10, 7).digits;
        CHECK(dv[0] == dv[6]);
        CHECK(dv[1] == dv[5]);
        CHECK(dv[2] == 0);
        CHECK(dv[3] == 0);
        CHECK(dv[4] == 0);
        CHECK(std::gcd<u64>(dv[0], 10) == 1);
    }
}

TEST_CASE("quasi cover stream") {
    quasi_cover_iter it(2, 2, 1);
    std::vector<u64> values;
    quasi_cover_triple tr;
    while (it.next(tr)) values.push_back(tr.value);
    CHECK(values == std::vector<u64>{5, 7});

    quasi_cover_iter it10(10, 2, 1);
    u64 count = 0;
    while (it10.next(tr)) {
        ++count;
        CHECK(tr.value == tr.skeleton + 10 * tr.offset);
        CHECK(is_quasi_palindrome(tr.value, 10, 1));
    }
    CHECK(count == 40);  // |A_1| * b^(L-1) = 4 * 10
}
