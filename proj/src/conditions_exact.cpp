#include "conditions_exact.hpp"

#include <limits>
#include <stdexcept>

#include "conditions.hpp"

namespace tvlab {

namespace {

BigUint big(long long v) {
    if (v < 0) throw std::invalid_argument("negative parameter");
    return BigUint(static_cast<uint64_t>(v));
}

BigUint count_term(long long f1, long long f2, long long inner1, long long inner2) {
    BigUint inner = big(inner1) * big(inner2) - BigUint(1);
    return big(f1) * big(f2) * inner + BigUint(1);
}

// 1 + ln(count) + k_a * ln(1 - (1 - 1/k_b)^e) with the probability factor
// expanded over the common denominator k_b^e.
double coupon_value_log(const BigUint& count, long long k_a, long long k_b, long long expo) {
    BigUint denom = BigUint::pow(big(k_b), static_cast<uint64_t>(expo));
    BigUint numer = denom - BigUint::pow(big(k_b - 1), static_cast<uint64_t>(expo));
    double log_prob = numer.is_zero()
                          ? -std::numeric_limits<double>::infinity()
                          : numer.log_natural() - denom.log_natural();
    return 1.0 + count.log_natural() + static_cast<double>(k_a) * log_prob;
}

} // namespace

ExactConditionEval exact_cond_transversals(long long k_a, long long k_b, long long d_a,
                                           long long d_b) {
    if (k_a < 2 || k_b < 1 || d_a < 1 || d_b < 1)
        throw std::invalid_argument("exact condition 1: bad parameters");
    ExactConditionEval e;
    // rhs = ln d_a + (1 + ln(k_a d_b)) / (k_a - 1)
    //     = (1 + ln(k_a * d_b * d_a^(k_a-1))) / (k_a - 1)
    BigUint product =
        big(k_a) * big(d_b) * BigUint::pow(big(d_a), static_cast<uint64_t>(k_a - 1));
    e.lhs_log = big(k_b).log_natural();
    e.rhs_log = (1.0 + product.log_natural()) / static_cast<double>(k_a - 1);
    e.holds = e.lhs_log >= e.rhs_log - kLogTolerance;
    return e;
}

ExactConditionEval exact_cond_coupon(long long k_a, long long k_b, long long d_a,
                                     long long d_b) {
    if (k_a < 1 || k_b < 1 || d_a < 1 || d_b < 1)
        throw std::invalid_argument("exact condition 2: bad parameters");
    ExactConditionEval e;
    e.lhs_log = coupon_value_log(count_term(k_a, d_a, k_b, d_b), k_a, k_b, d_a);
    e.rhs_log = 0.0;
    e.holds = e.lhs_log <= e.rhs_log + kLogTolerance;
    return e;
}

ExactConditionEval exact_cond_coupon_dp(long long k_a, long long k_b, long long delta_a,
                                        long long delta_b) {
    if (k_a < 1 || k_b < 1 || delta_a < 1 || delta_b < 1)
        throw std::invalid_argument("exact condition 3: bad parameters");
    long long expo;
    if (k_b >= k_a) {
        expo = delta_a;
    } else {
        if ((delta_a * k_b) % k_a != 0)
            throw std::invalid_argument("exact condition 3: non-integer exponent");
        expo = delta_a * k_b / k_a;
    }
    ExactConditionEval e;
    e.lhs_log = coupon_value_log(count_term(delta_a, 1, delta_b, 1), k_a, k_b, expo);
    e.rhs_log = 0.0;
    e.holds = e.lhs_log <= e.rhs_log + kLogTolerance;
    return e;
}

} // namespace tvlab
