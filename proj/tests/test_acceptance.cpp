// Full acceptance run; each criterion prints its own PASS/FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "acceptance.hpp"

TEST_CASE("acceptance criteria") {
    acceptance::Options opt;
    const auto results = acceptance::run_all(std::cout, opt);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.passed);
    }
}
