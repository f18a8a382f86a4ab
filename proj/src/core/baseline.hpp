#pragma once

// Frozen regression constants for checks whose literature bounds carry
// unspecified constants. JSON map: check id -> {constant, grid_hash, ...}.
// Regression checks refuse to run when their entry is absent.

#include <map>
#include <optional>
#include <string>

#include "core/common.hpp"

namespace palsieve {

struct baseline_entry {
    double constant = 0.0;
    std::string grid_hash;
    double epsilon = 0.0;  // only for entries with a q^eps factor
    std::string note;
};

struct baseline_store {
    std::map<std::string, baseline_entry> entries;

    static baseline_store load(const std::string& path);  // throws on I/O failure
    void save(const std::string& path) const;
    std::string to_json() const;

    // Entry for id, verifying the grid fingerprint; throws std::runtime_error
    // when missing or when the recorded grid does not match.
    const baseline_entry& require(const std::string& id, const std::string& grid_hash) const;
};

}  // namespace palsieve
