#pragma once

#include "bigint.hpp"
#include "cover.hpp"
#include "json_io.hpp"

namespace tvlab {

// All real comparisons happen in log domain at this tolerance; ties count as
// holding because the underlying inequalities are non-strict.
inline constexpr double kLogTolerance = 1e-9;

inline constexpr const char* kLogConvention =
    "natural log; thresholds use ln, log4(x) = ln(x)/ln(4)";

// Outcome of one sufficiency check. lhs_log/rhs_log are the natural logs of
// the two compared quantities; holds means lhs (vs) rhs within tolerance.
struct ConditionReport {
    std::string id;
    bool holds = false;
    double lhs_log = 0.0;
    double rhs_log = 0.0;
    json inputs;
    json extra; // optional advisory entries (e.g. the equal-k star bound)
};

json condition_report_to_json(const ConditionReport& r);

// Condition 1: k_B >= (e * k_A * d_B)^(1/(k_A-1)) * d_A.
// Requires k_A >= 2 and all inputs >= 1.
ConditionReport cond_transversals(long long k_a, long long k_b, long long d_a, long long d_b);

// Condition 2: e * (k_A*d_A*(k_B*d_B - 1) + 1) * (1 - (1 - 1/k_B)^d_A)^k_A <= 1.
// The count factor is computed in exact integer arithmetic before the log.
ConditionReport cond_coupon(long long k_a, long long k_b, long long d_a, long long d_b);

// Condition 3: e * (delta_A*(delta_B - 1) + 1)
//                * (1 - (1 - 1/k_B)^(delta_A * min(1, k_B/k_A)))^k_A <= 1.
ConditionReport cond_coupon_dp(long long k_a, long long k_b, long long delta_a, long long delta_b);

struct LocalReport {
    bool swapped = false; // true when the sides were exchanged so d_b >= d_a
    int branch = 0;       // 1 when d_B >= d_A^2 (condition 1), else 2
    ConditionReport invoked;
    bool invoked_valid = true; // false when the branch checker rejects the inputs
    long long threshold_a = 0; // ceil((1+eps) * d / ln d), original sides
    long long threshold_b = 0;
    double epsilon = 0.0;
    long long d_a = 0, d_b = 0, k_a = 0, k_b = 0;
};

// Case split behind the two-sided degree threshold: picks condition 1 when
// the larger cover degree is at least the square of the smaller, condition 2
// otherwise, evaluates the picked condition for the given part sizes, and
// echoes the per-side thresholds. Advisory: it certifies sufficiency only
// when the invoked exact condition holds. Requires d_a, d_b >= 2.
LocalReport local_sufficient(long long d_a, long long d_b, double epsilon,
                             long long k_a, long long k_b);

json local_report_to_json(const LocalReport& r);

struct Prop8Bounds {
    Rational lower;      // k^k / k!, exact
    double upper = 0.0;  // (k^(k+1) / k!) * ln k
};

// Part-size-k thresholds for complete bipartite bases with |B| = k: below
// `lower` A-vertices every cover has an independent transversal; at or above
// `upper` some cover has none. Requires k >= 2.
Prop8Bounds prop8_bounds(long long k);

json prop8_bounds_to_json(long long k, const Prop8Bounds& b);

// Convenience: evaluate every applicable checker on a degree profile.
json conditions_for_profile(const DegreeProfile& p);

} // namespace tvlab
