// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance and grid is pinned inside the registered checks.
// Usage: acceptance_tests [baseline.json]

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "core/verify.hpp"

using namespace palsieve;

int main(int argc, char** argv) {
    std::string baseline = argc > 1 ? argv[1] : "data/baselines.json";
    u32 threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    verify_options opt;
    opt.threads = threads;
    opt.baseline_path = baseline;

    // criterion -> registered check
    const std::vector<std::pair<std::string, std::string>> criteria = {
        {"C01 palindrome enumeration oracle", "pal-enum"},
        {"C02 square-free certification oracle", "squarefree"},
        {"C03 digit-reversal properties", "rho"},
        {"C04 quasi-palindrome cover bijection", "quasi-cover"},
        {"C05 Salie identity for square moduli", "salie"},
        {"C06 K2 CRT multiplicativity", "k2-crt"},
        {"C07 K2 correlation identity and bound", "k2-correlation"},
        {"C08 Gauss-sum forced vanishing", "gauss-vanishing"},
        {"C09 phi-product moment exactness", "phi-moment"},
        {"C10 algebraic shift identity", "shift-identity"},
        {"C11 sum-to-product / incomplete-sum bounds", "pal-sum-bounds"},
        {"C12 van der Corput inequality", "vdc"},
        {"C13 congruence and gcd-sum bounds", "cong-gcd"},
        {"C14 large-sieve regression vs baselines", "sieve-regression"},
        {"C15 progression/divisibility ratio baselines", "bs-ratio"},
        {"C16 square-pair oracle and dyadic trend", "square-pairs"},
        {"C17 equidistribution trend across scales", "equidist-trend"},
        {"C18 CSV determinism across thread counts", "determinism"},
    };

    int failures = 0;
    double total_ms = 0.0;
    for (const auto& [label, id] : criteria) {
        check_result r;
        try {
            r = run_check(id, opt);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        total_ms += r.millis;
        std::printf("[%s] %s (%s; %llu cases, %.1f ms)\n", r.passed ? "PASS" : "FAIL",
                    label.c_str(), r.detail.c_str(), (unsigned long long)r.cases, r.millis);
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed (%.1f s total, %u threads)\n",
                (int)criteria.size() - failures, criteria.size(), total_ms / 1000.0, threads);
    return failures ? 1 : 0;
}
