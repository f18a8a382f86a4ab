#include "doctest.h"

#include <cmath>
#include <numeric>

#include "core/equidist.hpp"

using namespace palsieve;

TEST_CASE("main term") {
    // 6 * S(990) * S(1) * |P*_10(100)| / pi^2 with |P*| = 2
    double expect = 6.0 * (605.0 / 384.0) * 2.0 / (3.14159265358979323846 * 3.14159265358979323846);
    CHECK(main_term(10, 1, 100) == doctest::Approx(expect));
    CHECK(main_term(10, 1, 100) == doctest::Approx(1.91561).epsilon(1e-4));
    CHECK(main_term(10, 7, 100) == doctest::Approx(expect * (49.0 / 48.0) / 7.0));
    CHECK(main_term(10, 1, 0) == 0.0);
    CHECK_THROWS_AS(main_term(10, 11, 100), std::domain_error);  // 11 | 990
}

TEST_CASE("squarefree counts in classes") {
    CHECK(sqfree_pal_count(10, 100, 1, 0) == 2);  // {1, 7}
    CHECK(sqfree_pal_count(10, 100, 3, 0) == 0);  // members are coprime to 3
    // partition identity over all classes
    for (u64 q : {3ull, 7ull, 20ull}) {
        u64 total = 0;
        for (i64 a = 0; a < (i64)q; ++a) total += sqfree_pal_count(2, 100000, q, a);
        CHECK(total == sqfree_pal_count(2, 100000, 1, 0));
    }
}

TEST_CASE("discrepancy sweep is an exact sup") {
    double d = discrepancy(10, 100, 1);
    // at y = 100 the difference is |2 - 1.9156| but the sup over y is larger:
    // just before 7 enters, |P*| = 1 and the class count is 1
    CHECK(d >= std::abs(2.0 - main_term(10, 1, 100)) - 1e-12);
    // brute-force maximization over every integer y
    for (u64 q : {1ull, 7ull}) {
        double fast = discrepancy(10, 3000, q);
        double brute = 0.0;
        for (u64 y = 1; y <= 3000; ++y) {
            for (u64 a = 0; a < q; ++a) {
                if (q > 1 && std::gcd(a, q) != 1) continue;
                brute = std::max(brute, std::abs((double)sqfree_pal_count(10, y, q, (i64)a) -
                                                 main_term(10, q, y)));
            }
        }
        CHECK(fast == doctest::Approx(brute).epsilon(1e-12));
    }
    CHECK(discrepancy(10, 0, 1) == 0.0);
}

TEST_CASE("dyadic aggregates") {
    CHECK(e_of_q(10, 100, 1) == doctest::Approx(discrepancy(10, 100, 1)));
    // q ~ 8 coprime to 990 leaves only q = 7
    CHECK(e_of_q(10, 10000, 8) == doctest::Approx(discrepancy(10, 10000, 7)));
    CHECK(e_of_qd(10, 10000, 1, 2) >= 0.0);
    // D^2 beyond x: inner counts vanish, the sum collapses to the main terms
    double v = e_of_qd(10, 100, 1, 40);
    double expect = 0.0;
    u64 star = 2;  // |P*_10(100)|
    for (u64 d = 21; d <= 40; ++d)
        if (std::gcd(d, 990ull) == 1) expect += (double)star / ((double)d * d);
    CHECK(v == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("experiment runs deterministically") {
    experiment_config cfg;
    cfg.base = 10;
    cfg.scales = {100};
    cfg.moduli = {1};
    auto rep = run_experiment(cfg);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].count == 2);
    CHECK(rep.rows[0].main == doctest::Approx(main_term(10, 1, 100)));

    experiment_config multi;
    multi.base = 10;
    multi.scales = {1000, 100000};
    multi.moduli = {7, 13};
    multi.threads = 1;
    auto r1 = run_experiment(multi);
    multi.threads = 4;
    auto r4 = run_experiment(multi);
    CHECK(report_to_csv(r1) == report_to_csv(r4));
    // rows sorted by (x, q, a); classes are the units
    REQUIRE(r1.rows.size() == (6 + 12) * 2);
    CHECK(std::is_sorted(r1.rows.begin(), r1.rows.end(), [](auto& a, auto& b) {
        return std::tie(a.x, a.q, a.a) < std::tie(b.x, b.q, b.a);
    }));

    experiment_config empty;
    empty.base = 10;
    empty.scales = {1000};
    auto re = run_experiment(empty);
    CHECK(re.rows.empty());

    experiment_config bad;
    bad.base = 10;
    bad.scales = {1000};
    bad.moduli = {11};
    CHECK_THROWS_AS(run_experiment(bad), std::invalid_argument);
}

TEST_CASE("report rendering") {
    experiment_config cfg;
    cfg.base = 10;
    cfg.scales = {100};
    cfg.moduli = {1};
    auto rep = run_experiment(cfg);
    std::string csv = report_to_csv(rep);
    CHECK(csv.find("# schema=1\n") == 0);
    CHECK(csv.find("x,q,a,count,main_term,abs_err,rel_err,sigma_hat") != std::string::npos);
    CHECK(csv.find("100,1,0,2,") != std::string::npos);
    std::string json = report_to_json(rep);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("config_hash") != std::string::npos);
    std::string tsv = report_to_tsv(rep);
    CHECK(tsv.find('\t') != std::string::npos);
}
