#pragma once

#include "json_io.hpp"

namespace tvlab {

// The shipped verification battery: ten structural and statistical checks
// covering the extremal generators, the condition checkers against the
// exact-rational route, correlation of blocking events, and agreement of the
// three solvers. `tvlab bench --suite acceptance` and the acceptance test
// binary both run these.
inline constexpr int kNumCriteria = 10;

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double wall_ms = 0.0;
    json details;
};

CriterionResult run_criterion(int index); // 1-based

json criterion_result_to_json(const CriterionResult& r);
json run_acceptance_suite();

} // namespace tvlab
