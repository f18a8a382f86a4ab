#include "doctest.h"

#include "core/oracle.hpp"

using namespace palsieve;

TEST_CASE("naive palindrome set") {
    auto s = oracle::naive_pal_set(10, 30);
    CHECK(s == std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 22});
    auto s2 = oracle::naive_pal_set(2, 10);
    CHECK(s2 == std::vector<u64>{1, 3, 5, 7, 9});
    CHECK(oracle::naive_pal_set(10, 0).empty());
}

TEST_CASE("naive squarefree") {
    CHECK(oracle::naive_squarefree(1));
    CHECK_FALSE(oracle::naive_squarefree(49));
    CHECK(oracle::naive_squarefree(210));
}

TEST_CASE("naive quasi sets and counts") {
    auto set1 = oracle::naive_quasi_set(2, 2, 1);
    CHECK(set1 == std::vector<u64>{5, 7});
    auto counts = oracle::naive_quasi_counts(10, 4, 2);
    auto lv1 = oracle::naive_quasi_set(10, 4, 1);
    auto lv2 = oracle::naive_quasi_set(10, 4, 2);
    CHECK(counts[0] == lv1.size());
    CHECK(counts[1] == lv2.size());
}

TEST_CASE("van der Corput inequality") {
    std::vector<cplx> ones(50, cplx(1, 0));
    auto r = oracle::vdc_check(ones, 1);
    CHECK(r.lhs == doctest::Approx(2500.0));
    CHECK(r.rhs == doctest::Approx(2500.0));
    CHECK(r.holds);
    auto r2 = oracle::vdc_check(ones, 50);
    CHECK(r2.holds);
    CHECK(r2.rhs >= r2.lhs - 1e-6);
}

TEST_CASE("congruence bound") {
    auto r = oracle::cong_bound_check(1, 1, 1);
    CHECK(r.lhs == 1);
    CHECK(r.rhs_value == doctest::Approx(2.0));
    CHECK(r.holds);
    auto r2 = oracle::cong_bound_check(4, 10, 6);
    CHECK(r2.holds);
    CHECK(r2.rhs_value == doctest::Approx(40.0 * 4 / 6 + 4 * 4));
    auto r3 = oracle::cong_bound_check(10, 10, 1);
    CHECK(r3.lhs == 100);
    CHECK(r3.holds);
}

TEST_CASE("quadrature moments") {
    CHECK(oracle::quad_moment(5, 1, 3) == 1.0);
    CHECK(oracle::quad_moment(2, 2, 2) == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(oracle::quad_moment(2, 2, 1) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("naive square pairs") {
    CHECK(oracle::naive_square_pair_count(10, 2, 1, 0, 40) == 0);
    CHECK(oracle::naive_square_pair_count(2, 4, 1, 0, 2) == 0);  // odd blocks dodge 4
}
