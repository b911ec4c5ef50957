// Acceptance suite: runs the ten-check verification battery and prints one
// pass/fail line per criterion. `tvlab bench --suite acceptance` produces the
// same results as JSON.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "bench.hpp"

using namespace tvlab;

namespace {

void run_and_report(int index) {
    CriterionResult r = run_criterion(index);
    std::printf("[%2d/%d] %s  %s  (%.0f ms)\n", r.index, kNumCriteria,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.wall_ms);
    if (!r.pass) std::printf("        details: %s\n", r.details.dump().c_str());
    std::fflush(stdout);
    CHECK(r.pass);
}

} // namespace

TEST_CASE("criterion 1: star construction") { run_and_report(1); }
TEST_CASE("criterion 2: square construction") { run_and_report(2); }
TEST_CASE("criterion 3: counting direction") { run_and_report(3); }
TEST_CASE("criterion 4: greedy direction") { run_and_report(4); }
TEST_CASE("criterion 5: degree-16 variant") { run_and_report(5); }
TEST_CASE("criterion 6: negative correlation") { run_and_report(6); }
TEST_CASE("criterion 7: condition checkers") { run_and_report(7); }
TEST_CASE("criterion 8: randomized solver") { run_and_report(8); }
TEST_CASE("criterion 9: hypergraph route") { run_and_report(9); }
TEST_CASE("criterion 10: oracle equivalence") { run_and_report(10); }
