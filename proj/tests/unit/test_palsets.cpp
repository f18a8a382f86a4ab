#include "doctest.h"

#include <numeric>

#include "core/oracle.hpp"
#include "core/palsets.hpp"

using namespace palsieve;

TEST_CASE("block enumeration") {
    pal_block_iter it(2, 2);
    u64 v;
    std::vector<u64> got;
    while (it.next(v)) got.push_back(v);
    CHECK(got == std::vector<u64>{5, 7});

    pal_block_iter it10(10, 2);
    got.clear();
    while (it10.next(v)) got.push_back(v);
    REQUIRE(got.size() == 90);
    CHECK(got.front() == 101);
    CHECK(got[1] == 111);
    CHECK(got.back() == 999);
    CHECK(std::is_sorted(got.begin(), got.end()));

    pal_block_iter it0(10, 0);
    got.clear();
    while (it0.next(v)) got.push_back(v);
    CHECK(got == std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("block sizes and counting") {
    CHECK(pal_block_size(10, 2) == 90);
    CHECK(pal_block_size(2, 2) == 2);
    CHECK(count_upto(10, 1000, pal_variant::all) == 108);
    CHECK(count_upto(10, 0, pal_variant::all) == 0);
    CHECK(count_upto(10, 100, pal_variant::star) == 2);  // {1, 7}
    // partial blocks against the string oracle
    for (u32 b : {2u, 3u, 10u})
        for (u64 x : {1ull, 9ull, 57ull, 1234ull, 99999ull})
            CHECK(count_upto(b, x, pal_variant::all) == oracle::naive_pal_set(b, x).size());
    // even-exponent variant: odd digit counts only
    CHECK(count_upto(10, 99, pal_variant::even_exp) == 9);
    CHECK(count_upto(10, 1000, pal_variant::even_exp) == 9 + 90);
}

TEST_CASE("arithmetic progression slices") {
    CHECK(count_in_ap(2, 2, 3, 2) == 1);  // only 5
    CHECK(count_in_ap(10, 2, 11, 0) == 8);
    // modulus 1 keeps the coprimality filter only
    u64 coprime_count = 0;
    pal_block_iter it(10, 2);
    for (u64 p; it.next(p);)
        if (std::gcd(p, 10ull) == 1) ++coprime_count;
    CHECK(count_in_ap(10, 2, 1, 0) == coprime_count);
    // partition identity
    for (u64 q : {2ull, 7ull, 12ull}) {
        auto hist = ap_histogram(10, 3, q, true);
        u64 total = 0;
        for (u64 c : hist) total += c;
        CHECK(total == count_in_ap(10, 3, 1, 0));
    }
    // histogram matches the scalar op
    auto hist = ap_histogram(10, 2, 7, true);
    for (u64 a = 0; a < 7; ++a) CHECK(hist[a] == count_in_ap(10, 2, 7, (i64)a));
}

TEST_CASE("divisibility counts") {
    CHECK(count_divisible(10, 2, 11) == 8);
    CHECK(count_divisible(10, 2, 1) == 90);
    CHECK(count_divisible(2, 2, 7) == 1);
}

TEST_CASE("banks-shparlinski ratio") {
    double r = bs_max_ratio(10, 2, 1);
    u64 coprime_count = count_in_ap(10, 2, 1, 0);
    CHECK(r == doctest::Approx((double)coprime_count / (90.0 + 1.0)));
    CHECK(r < 1.0);
    CHECK(bs_max_ratio(10, 4, 7) > 0.0);
}

TEST_CASE("square pair counts match the oracle") {
    // N^2 beyond the block
    CHECK(count_square_pairs(10, 2, 1, 0, 4000) == 0);
    // (l,10)=1 forbids divisibility by 4
    CHECK(count_square_pairs(10, 2, 1, 0, 2) == 0);
    for (u32 b : {2u, 10u})
        for (u32 L = 1; L <= 4; ++L)
            for (u64 q : {1ull, 3ull})
                for (u64 N : {1ull, 2ull, 3ull, 5ull, 8ull})
                    for (i64 a = 0; a < (i64)q; ++a)
                        CHECK(count_square_pairs(b, L, q, a, N) ==
                              oracle::naive_square_pair_count(b, L, q, a, N));
    CHECK_THROWS_AS(count_square_pairs(10, 2, 5, 0, 2), std::domain_error);
}

TEST_CASE("square pair profile buckets by dyadic window") {
    std::vector<u64> windows{1, 2, 4, 8};
    auto prof = square_pair_profile(10, 3, 1, 0, windows);
    for (size_t i = 0; i < windows.size(); ++i)
        CHECK(prof[i] == count_square_pairs(10, 3, 1, 0, windows[i]));
}

TEST_CASE("parallel enumeration is schedule independent") {
    auto h1 = ap_histogram(10, 4, 13, true, 1);
    auto h4 = ap_histogram(10, 4, 13, true, 4);
    CHECK(h1 == h4);
    CHECK(count_divisible(10, 4, 37, 1) == count_divisible(10, 4, 37, 4));
}
