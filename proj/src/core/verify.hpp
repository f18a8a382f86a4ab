#pragma once

// Registry of executable lemma/identity checks. Each check pins its own grid
// and tolerance; `run_all` is the single entry point the CLI and the
// acceptance suite share. Checks marked needs_baseline compare against the
// frozen constants in the baseline file and fail if their entry is missing.

#include <functional>
#include <string>

#include "core/baseline.hpp"
#include "core/common.hpp"

namespace palsieve {

struct verify_options {
    u64 qmax = 0;      // 0 = check default
    u64 nmax = 0;
    u64 xmax = 0;
    u64 lmax = 0;
    u64 dmax = 0;
    u64 trials = 0;
    u64 seed = 0;      // 0 = default seed
    u32 threads = 1;
    std::string baseline_path;
};

struct check_result {
    std::string id;
    bool passed = false;
    u64 cases = 0;
    std::string detail;
    double millis = 0.0;
};

struct check_info {
    std::string id;
    std::string summary;
    bool needs_baseline;
};

const std::vector<check_info>& verify_checks();

// Runs one check by id; throws std::invalid_argument for unknown ids.
check_result run_check(const std::string& id, const verify_options& opt);

std::vector<check_result> run_all(const verify_options& opt);

// Measures every baseline-backed constant on its pinned grid and returns the
// store to freeze. Deterministic for a fixed seed.
baseline_store compute_baselines(u32 threads, u64 seed = 0);

}  // namespace palsieve
