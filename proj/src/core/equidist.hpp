#pragma once

// Square-free palindromes in arithmetic progressions versus the predicted
// main term 6 S(m_b) S(q) |P*_b(y)| / (pi^2 q), where m_b = b^3 - b and S is
// the singular series. Includes the per-modulus discrepancy (exact sup over
// y by sweeping the jump points), its dyadic aggregates, and a deterministic
// experiment driver with CSV/JSON output.

#include <optional>
#include <string>

#include "core/common.hpp"

namespace palsieve {

// Requires (q, b^3 - b) = 1. |P*_b(y)| is exact.
double main_term(u32 base, u64 q, u64 y);

// #{n in P*_b(y) : n = a (q), n squarefree}.
u64 sqfree_pal_count(u32 base, u64 y, u64 q, i64 a);

// sup over y <= x, max over units a mod q, of |count - main term|. The
// difference only changes at members of P*_b(x), so the sweep is exact.
double discrepancy(u32 base, u64 x, u64 q);

// sum of discrepancy(b, x, q) over Q/2 < q <= Q with (q, m_b) = 1.
double e_of_q(u32 base, u64 x, u64 Q);

// sum over q ~ Q, (q,m_b)=1 of sup_y max_a sum over d ~ D, (d, q m_b)=1 of
// |#{n in P*_b(y): d^2 | n, n = a (q)} - |P*_b(y)| / (q d^2)|.
double e_of_qd(u32 base, u64 x, u64 Q, u64 D);

struct experiment_config {
    u32 base = 10;
    std::vector<u64> scales;   // increasing x values
    std::vector<u64> moduli;   // each must be coprime to b^3 - b
    u32 threads = 1;
    u64 seed = 0;              // recorded in metadata only
    std::string baseline_path; // recorded in metadata only
};

struct report_row {
    u64 x, q;
    u64 a;
    u64 count;
    double main;
    double abs_err;
    double rel_err;    // abs_err / max(main, 1)
    double sigma_hat;  // -log(abs_err / sqrt(x)) / sqrt(log x)
};

struct experiment_report {
    experiment_config config;
    std::vector<report_row> rows;  // sorted by (x, q, a)
    std::vector<std::pair<u64, double>> max_rel_err_by_scale;
    u64 config_hash = 0;
    double wall_ms = 0.0;
};

// Deterministic: identical rows for any thread count. Throws
// std::invalid_argument if a modulus shares a factor with b^3 - b.
experiment_report run_experiment(const experiment_config& config);

// schema=1 CSV: header comment, then x,q,a,count,main_term,abs_err,rel_err,
// sigma_hat. Byte-identical across thread counts.
std::string report_to_csv(const experiment_report& report);
std::string report_to_tsv(const experiment_report& report);
std::string report_to_json(const experiment_report& report);

}  // namespace palsieve
