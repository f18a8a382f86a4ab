#include "doctest.h"

#include <cstdio>

#include "core/baseline.hpp"

using namespace palsieve;

TEST_CASE("baseline store round trip") {
    baseline_store store;
    store.entries["alpha"] = {1.25, "deadbeef00000000", 0.0, "test entry"};
    store.entries["beta"] = {3.5, "0123456789abcdef", 0.1, ""};
    std::string path = "/tmp/palsieve_baseline_test.json";
    store.save(path);
    baseline_store loaded = baseline_store::load(path);
    REQUIRE(loaded.entries.size() == 2);
    CHECK(loaded.entries["alpha"].constant == 1.25);
    CHECK(loaded.entries["alpha"].note == "test entry");
    CHECK(loaded.entries["beta"].epsilon == 0.1);
    std::remove(path.c_str());

    CHECK(&loaded.require("alpha", "deadbeef00000000") == &loaded.entries["alpha"]);
    CHECK_THROWS_AS(loaded.require("gamma", "deadbeef00000000"), std::runtime_error);
    CHECK_THROWS_AS(loaded.require("alpha", "ffffffffffffffff"), std::runtime_error);
    CHECK_THROWS_AS(baseline_store::load("/nonexistent/path.json"), std::runtime_error);
}
