// Exercises the shared-library surface through the public header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "palsieve.h"

TEST_CASE("status strings and version") {
    CHECK(std::string(ps_status_name(PS_OK)) == "ok");
    CHECK(std::string(ps_status_name(PS_ERR_DOMAIN)) == "domain");
    CHECK(ps_version() != nullptr);
}

TEST_CASE("digit functions") {
    uint32_t digits[16];
    size_t len = 0;
    REQUIRE(ps_digits_of(123, 10, 5, digits, 16, &len) == PS_OK);
    REQUIRE(len == 5);
    CHECK(digits[0] == 3);
    CHECK(digits[4] == 0);
    uint64_t value = 0;
    REQUIRE(ps_digits_value(digits, len, 10, &value) == PS_OK);
    CHECK(value == 123);

    CHECK(ps_digits_of(123, 10, 2, digits, 16, &len) == PS_ERR_RANGE);
    CHECK(std::strlen(ps_last_error()) > 0);

    uint64_t rev = 0;
    REQUIRE(ps_reverse_digits(123, 10, 4, &rev) == PS_OK);
    CHECK(rev == 32100);
    CHECK(ps_reverse_digits(100000, 10, 4, &rev) == PS_ERR_RANGE);

    int flag = 0;
    REQUIRE(ps_is_palindrome(12321, 10, &flag) == PS_OK);
    CHECK(flag == 1);
    REQUIRE(ps_is_quasi_palindrome(12023, 10, 1, &flag) == PS_OK);
    CHECK(flag == 1);
    CHECK(ps_is_palindrome(0, 10, &flag) == PS_ERR_DOMAIN);
}

TEST_CASE("arith functions") {
    ps_factor factors[16];
    size_t count = 0;
    REQUIRE(ps_factorize(990, factors, 16, &count) == PS_OK);
    REQUIRE(count == 4);
    CHECK(factors[1].prime == 3);
    CHECK(factors[1].exponent == 2);

    ps_arith_info info;
    REQUIRE(ps_arith_functions(12, &info) == PS_OK);
    CHECK(info.phi == 4);
    CHECK(info.mobius == 0);
    CHECK(info.tau == 6);
    CHECK(info.odd_part == 3);

    int sf = 0;
    REQUIRE(ps_is_squarefree(45, &sf) == PS_OK);
    CHECK(sf == 0);

    uint64_t inv = 0;
    REQUIRE(ps_mod_inverse(3, 10, &inv) == PS_OK);
    CHECK(inv == 7);
    CHECK(ps_mod_inverse(2, 4, &inv) == PS_ERR_DOMAIN);

    uint64_t x = 0;
    REQUIRE(ps_crt_combine(2, 3, 3, 5, &x) == PS_OK);
    CHECK(x == 8);

    int64_t c = 0;
    REQUIRE(ps_ramanujan_c(4, 2, &c) == PS_OK);
    CHECK(c == -2);

    int64_t num = 0;
    uint64_t den = 0;
    REQUIRE(ps_singular_series(990, &num, &den) == PS_OK);
    CHECK(num == 605);
    CHECK(den == 384);
}

TEST_CASE("palindrome counting and iteration") {
    uint64_t count = 0;
    REQUIRE(ps_pal_count_upto(10, 1000, PS_PAL_ALL, &count) == PS_OK);
    CHECK(count == 108);
    REQUIRE(ps_pal_count_upto(10, 100, PS_PAL_STAR, &count) == PS_OK);
    CHECK(count == 2);

    uint64_t block = 0;
    REQUIRE(ps_pal_block_size(10, 2, &block) == PS_OK);
    CHECK(block == 90);

    REQUIRE(ps_pal_count_in_ap(10, 2, 11, 0, 1, &count) == PS_OK);
    CHECK(count == 8);
    REQUIRE(ps_pal_count_divisible(10, 2, 11, &count) == PS_OK);
    CHECK(count == 8);
    REQUIRE(ps_pal_count_square_pairs(10, 2, 3, 1, 3, &count) == PS_OK);
    CHECK(ps_pal_count_square_pairs(10, 2, 5, 0, 3, &count) == PS_ERR_DOMAIN);

    double ratio = 0;
    REQUIRE(ps_pal_bs_max_ratio(10, 2, 7, &ratio) == PS_OK);
    CHECK(ratio > 0.0);

    ps_pal_iter* iter = nullptr;
    REQUIRE(ps_pal_iter_new(2, 2, &iter) == PS_OK);
    uint64_t v = 0;
    int has = 0;
    std::vector<uint64_t> got;
    while (ps_pal_iter_next(iter, &v, &has) == PS_OK && has) got.push_back(v);
    ps_pal_iter_free(iter);
    CHECK(got == std::vector<uint64_t>{5, 7});

    ps_quasi_iter* qit = nullptr;
    REQUIRE(ps_quasi_iter_new(2, 2, 1, &qit) == PS_OK);
    uint64_t a = 0, m = 0;
    got.clear();
    while (ps_quasi_iter_next(qit, &a, &m, &v, &has) == PS_OK && has) got.push_back(v);
    ps_quasi_iter_free(qit);
    CHECK(got == std::vector<uint64_t>{5, 7});
}

TEST_CASE("exponential sums") {
    ps_complex z;
    double tol = 0;
    REQUIRE(ps_gauss_star(1, 2, &z, &tol) == PS_OK);
    CHECK(z.re == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(tol > 0);

    REQUIRE(ps_k2(1, 1, 4, &z, nullptr) == PS_OK);
    CHECK(std::abs(z.re) < 1e-12);
    CHECK(std::abs(z.im) < 1e-12);

    REQUIRE(ps_kummer2(1, 0, 2, &z, nullptr) == PS_OK);
    CHECK(z.re == doctest::Approx(-1.0 / std::sqrt(2.0)));

    int agree = 0;
    ps_complex lhs, rhs;
    REQUIRE(ps_k2_salie_check(1, 2, 3, &lhs, &rhs, &agree) == PS_OK);
    CHECK(agree == 1);
    REQUIRE(ps_k2_crt_check(1, 2, 3, 4, &lhs, &rhs, &agree) == PS_OK);
    CHECK(agree == 1);

    double sum_form, rama, bound;
    int id_ok, bound_ok;
    REQUIRE(ps_k2_correlation_check(1, 2, 5, &sum_form, &rama, &bound, &id_ok, &bound_ok) ==
            PS_OK);
    CHECK(id_ok == 1);
    CHECK(bound_ok == 1);
    CHECK(bound == doctest::Approx(2.0));

    int predicted = 0, vanishes = 0, b_ok = 0;
    REQUIRE(ps_gauss_star_structure(1, 16, &z, &predicted, &vanishes, &b_ok) == PS_OK);
    CHECK(predicted == 1);
    CHECK(vanishes == 1);

    double value, b1, b2;
    int ok;
    REQUIRE(ps_twisted_incomplete_k2(0.0, 1, 0, 1, 10, 1.0, 0.1, &value, &b1, &b2, &ok) == PS_OK);
    CHECK(value == doctest::Approx(10.0));

    double ratio;
    REQUIRE(ps_shparlinski_ratio(0, 0, 1, 2, 9, &ratio) == PS_OK);
    CHECK(ratio == doctest::Approx(6.0 / 9.0));
}

TEST_CASE("harmonics and large sieve") {
    double v = 0;
    REQUIRE(ps_phi_little(0.25, 2, &v) == PS_OK);
    CHECK(v == doctest::Approx(std::sqrt(2.0)));
    REQUIRE(ps_phi_big(0.0, 2, 3, &v) == PS_OK);
    CHECK(v == doctest::Approx(4.0));

    uint64_t m = 0;
    REQUIRE(ps_phi_moment_exact(2, 2, 2, &m) == PS_OK);
    CHECK(m == 6);

    double lhs, rhs;
    int holds;
    REQUIRE(ps_pal_exp_sum_check(0.0, 10, 1, &lhs, &rhs, &holds) == PS_OK);
    CHECK(holds == 1);
    REQUIRE(ps_incomplete_sum_check(0.0, 10, 99, &lhs, &rhs, &holds) == PS_OK);
    CHECK(lhs == doctest::Approx(9.0));

    int agree;
    REQUIRE(ps_algebraic_shift_check(7, 10, 0.1, 1, 3, 2.0, &lhs, &rhs, &agree) == PS_OK);
    CHECK(agree == 1);

    REQUIRE(ps_delta_bound(1, 1, 1, 0.0, &v) == PS_OK);
    CHECK(v == doctest::Approx(4.0));
    uint64_t cnt = 0;
    REQUIRE(ps_spacing_count(2, 10, 1, 0.25, &cnt) == PS_OK);
    CHECK(cnt == 10);
    REQUIRE(ps_spacing_sup(2, 10, 1, &cnt) == PS_OK);
    CHECK(cnt >= 10);

    std::vector<ps_complex> gamma{{1, 0}, {0, 0}, {1, 0}};
    double l2 = 0;
    REQUIRE(ps_ls_quadratic_form(gamma.data(), gamma.size(), 1, 1, &v, &l2) == PS_OK);
    CHECK(l2 == doctest::Approx(2.0));
    CHECK(v == doctest::Approx(4.0));

    REQUIRE(ps_phi_moment_square_moduli(2, 2, 1, 1, 1, 0.0, &v) == PS_OK);
    CHECK(v == doctest::Approx(4.0));
}

TEST_CASE("equidistribution surface") {
    double main = 0;
    REQUIRE(ps_main_term(10, 1, 100, &main) == PS_OK);
    CHECK(main == doctest::Approx(1.91561).epsilon(1e-4));
    CHECK(ps_main_term(10, 11, 100, &main) == PS_ERR_DOMAIN);

    uint64_t count = 0;
    REQUIRE(ps_sqfree_pal_count(10, 100, 1, 0, &count) == PS_OK);
    CHECK(count == 2);

    double d = 0;
    REQUIRE(ps_discrepancy(10, 1000, 7, &d) == PS_OK);
    CHECK(d >= 0.0);
    REQUIRE(ps_e_of_q(10, 1000, 8, &d) == PS_OK);
    REQUIRE(ps_e_of_qd(10, 1000, 1, 2, &d) == PS_OK);

    ps_experiment* exp = nullptr;
    REQUIRE(ps_experiment_new(10, &exp) == PS_OK);
    REQUIRE(ps_experiment_add_scale(exp, 100000) == PS_OK);
    REQUIRE(ps_experiment_add_modulus(exp, 7) == PS_OK);
    REQUIRE(ps_experiment_set_threads(exp, 2) == PS_OK);
    REQUIRE(ps_experiment_set_seed(exp, 42) == PS_OK);
    size_t n = 0;
    CHECK(ps_experiment_row_count(exp, &n) == PS_ERR_INVALID);  // not run yet
    REQUIRE(ps_experiment_run(exp) == PS_OK);
    REQUIRE(ps_experiment_row_count(exp, &n) == PS_OK);
    CHECK(n == 6);
    ps_report_row row;
    REQUIRE(ps_experiment_row(exp, 0, &row) == PS_OK);
    CHECK(row.q == 7);
    CHECK(row.x == 100000);

    size_t needed = 0;
    REQUIRE(ps_experiment_render(exp, 0, nullptr, 0, &needed) == PS_OK);
    REQUIRE(needed > 0);
    std::vector<char> buf(needed);
    REQUIRE(ps_experiment_render(exp, 0, buf.data(), buf.size(), &needed) == PS_OK);
    CHECK(std::string(buf.data()).find("# schema=1") == 0);
    CHECK(ps_experiment_render(exp, 0, buf.data(), 3, &needed) == PS_ERR_RANGE);
    ps_experiment_free(exp);

    // modulus sharing a factor with b^3-b is a config error
    REQUIRE(ps_experiment_new(10, &exp) == PS_OK);
    REQUIRE(ps_experiment_add_scale(exp, 1000) == PS_OK);
    REQUIRE(ps_experiment_add_modulus(exp, 11) == PS_OK);
    CHECK(ps_experiment_run(exp) == PS_ERR_INVALID);
    ps_experiment_free(exp);
}

TEST_CASE("verification registry") {
    REQUIRE(ps_verify_count() > 0);
    bool found = false;
    for (size_t i = 0; i < ps_verify_count(); ++i) {
        REQUIRE(ps_verify_id(i) != nullptr);
        REQUIRE(ps_verify_summary(i) != nullptr);
        if (std::string(ps_verify_id(i)) == "salie") found = true;
    }
    CHECK(found);

    ps_verify_options opt{};
    opt.qmax = 8;  // tiny grid for the smoke run
    opt.threads = 2;
    int passed = 0;
    char detail[256];
    REQUIRE(ps_verify_run("salie", &opt, &passed, detail, sizeof detail) == PS_OK);
    CHECK(passed == 1);
    CHECK(ps_verify_run("no-such-check", &opt, &passed, nullptr, 0) == PS_ERR_INVALID);

    // baseline-backed check without a baseline reports failure, not success
    REQUIRE(ps_verify_run("sieve-regression", &opt, &passed, detail, sizeof detail) == PS_OK);
    CHECK(passed == 0);
}
