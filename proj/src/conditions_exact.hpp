#pragma once

#include "bigint.hpp"

namespace tvlab {

// Reference evaluations of the three sufficiency conditions via exact
// integer arithmetic: products and powers are built as big integers and a
// single accurate log is taken at the end. Deliberately a separate route
// from the double-precision checkers so the two can cross-validate.
struct ExactConditionEval {
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    bool holds = false;
};

ExactConditionEval exact_cond_transversals(long long k_a, long long k_b, long long d_a,
                                           long long d_b);

ExactConditionEval exact_cond_coupon(long long k_a, long long k_b, long long d_a,
                                     long long d_b);

// Only defined when the smoothed exponent delta_a * min(1, k_b/k_a) is an
// integer (k_b >= k_a, or k_a divides delta_a * k_b); throws otherwise.
ExactConditionEval exact_cond_coupon_dp(long long k_a, long long k_b, long long delta_a,
                                        long long delta_b);

} // namespace tvlab
