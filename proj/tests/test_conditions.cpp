#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conditions.hpp"
#include "conditions_exact.hpp"

using namespace tvlab;

TEST_CASE("part-size condition on worked examples") {
    // k_B against (e k_A d_B)^(1/(k_A-1)) d_A
    ConditionReport r = cond_transversals(3, 3, 1, 1);
    CHECK(r.holds);
    CHECK(std::exp(r.rhs_log) == doctest::Approx(std::sqrt(3.0 * std::exp(1.0))).epsilon(1e-12));

    r = cond_transversals(2, 4, 1, 2);
    CHECK_FALSE(r.holds);
    CHECK(std::exp(r.rhs_log) == doctest::Approx(4.0 * std::exp(1.0)).epsilon(1e-12));

    r = cond_transversals(2, 6, 1, 1);
    CHECK(r.holds);
    CHECK(std::exp(r.rhs_log) == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-12));

    // equal part sizes, A-side degree 1: the star bound k^(k-2)/e is advisory
    ConditionReport star = cond_transversals(3, 3, 1, 1);
    REQUIRE_FALSE(star.extra.is_null());
    CHECK(star.extra["condition"] == "COR_ASYM_STAR");
    CHECK(star.extra["max_b_degree"]["float"].get<double>() ==
          doctest::Approx(3.0 / std::exp(1.0)).epsilon(1e-12));
    CHECK(star.extra["holds"] == true); // d_b = 1 <= 3/e
    // against a b-degree above the star bound it stops holding
    ConditionReport star2 = cond_transversals(3, 3, 1, 2);
    CHECK(star2.extra["holds"] == false);

    CHECK_THROWS_AS(cond_transversals(1, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cond_transversals(2, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("event-count condition on worked examples") {
    ConditionReport r = cond_coupon(1, 1, 1, 1);
    CHECK_FALSE(r.holds);
    CHECK(std::exp(r.lhs_log) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    r = cond_coupon(10, 10, 2, 2);
    CHECK(r.holds);
    double expected = std::exp(1.0) * 381.0 * std::pow(0.19, 10);
    CHECK(std::exp(r.lhs_log) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::exp(r.lhs_log) < 1e-4); // the certified regime is comfortably inside

    r = cond_coupon(2, 2, 2, 2);
    CHECK_FALSE(r.holds);
    CHECK(std::exp(r.lhs_log) ==
          doctest::Approx(std::exp(1.0) * 13.0 * 0.5625).epsilon(1e-12));

    // k_B = 1 forces the probability factor to 1, so the value is e*count
    r = cond_coupon(5, 1, 3, 2);
    CHECK_FALSE(r.holds);
    CHECK(r.lhs_log == doctest::Approx(1.0 + std::log(5.0 * 3.0 * 1.0 + 1.0)).epsilon(1e-12));
}

TEST_CASE("smoothed condition on worked examples") {
    ConditionReport r = cond_coupon_dp(1, 1, 1, 1);
    CHECK_FALSE(r.holds);
    CHECK(std::exp(r.lhs_log) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    r = cond_coupon_dp(10, 10, 2, 2);
    CHECK(r.holds);
    CHECK(std::exp(r.lhs_log) ==
          doctest::Approx(std::exp(1.0) * 3.0 * std::pow(0.19, 10)).epsilon(1e-9));

    // k_B < k_A smooths the exponent: 2 * min(1, 10/20) = 1
    r = cond_coupon_dp(20, 10, 2, 2);
    CHECK(r.holds);
    CHECK(r.extra["exponent"]["float"].get<double>() == doctest::Approx(1.0));
    CHECK(std::exp(r.lhs_log) ==
          doctest::Approx(std::exp(1.0) * 3.0 * std::pow(0.1, 20)).epsilon(1e-6));
}

TEST_CASE("case split picks the right branch and echoes thresholds") {
    LocalReport r = local_sufficient(100, 10001, 0.5, 10, 10);
    CHECK(r.branch == 1); // 10001 >= 100^2
    CHECK_FALSE(r.swapped);

    r = local_sufficient(100, 200, 0.5, 10, 10);
    CHECK(r.branch == 2);

    r = local_sufficient(200, 100, 0.5, 10, 10);
    CHECK(r.swapped);
    CHECK(r.branch == 2);

    // exact boundary d_B == d_A^2 goes to the first branch
    r = local_sufficient(10, 100, 0.5, 10, 10);
    CHECK(r.branch == 1);

    // threshold echo: ceil(1.1e6 / ln(1e6)) = ceil(79620.66) = 79621
    r = local_sufficient(1000000, 1000000, 0.1, 2, 2);
    CHECK(r.threshold_a == 79621);
    CHECK(r.threshold_b == 79621);
    {
        // independent recomputation of the frozen value
        long double t = 1.1L * 1e6L / std::log(1e6L);
        CHECK(static_cast<long long>(std::ceil(t)) == 79621);
    }

    CHECK_THROWS_AS(local_sufficient(1, 100, 0.5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(local_sufficient(10, 100, 0.0, 2, 2), std::invalid_argument);
}

TEST_CASE("part-size thresholds for complete bipartite bases") {
    Prop8Bounds b = prop8_bounds(2);
    CHECK(b.lower == Rational(2));
    CHECK(b.upper == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-12));

    b = prop8_bounds(3);
    CHECK(b.lower == Rational(9, 2));
    CHECK(b.lower.to_double() == doctest::Approx(4.5));
    CHECK(b.upper == doctest::Approx(13.5 * std::log(3.0)).epsilon(1e-12));

    b = prop8_bounds(10);
    CHECK(b.lower.to_string() == "1562500/567");
    CHECK(b.upper == doctest::Approx(63453.072448028164).epsilon(1e-12));

    CHECK_THROWS_AS(prop8_bounds(1), std::invalid_argument);
}

TEST_CASE("oversized parameters are refused, not mangled") {
    // the exact count term would overflow 128 bits
    CHECK_THROWS_AS(cond_coupon(9'000'000'000LL, 9'000'000'000LL, 9'000'000'000LL,
                                9'000'000'000LL),
                    std::invalid_argument);
    // near the edge but still exact; parts this large certify easily
    ConditionReport r = cond_coupon(1'000'000, 1'000'000, 1'000'000, 1'000'000);
    CHECK(r.holds);
    CHECK(std::isfinite(r.lhs_log));
}

TEST_CASE("branch checker rejection is reported, not thrown") {
    // branch 1 (condition 1) needs k_a >= 2; with k_a = 1 the report simply
    // cannot certify
    LocalReport r = local_sufficient(10, 1000, 0.5, 1, 5);
    CHECK(r.branch == 1);
    CHECK_FALSE(r.invoked_valid);
    json j = local_report_to_json(r);
    CHECK(j["holds"] == false);
    CHECK(j["invoked"]["note"] == "inputs invalid for this branch");
}

TEST_CASE("event-count condition is monotone in part sizes on the grid") {
    for (long long ka = 1; ka <= 20; ++ka) {
        for (long long kb = 2; kb <= 20; ++kb) { // k_B = 1 has probability factor 1
            for (long long da = 1; da <= 20; da += 3) {
                for (long long db = 1; db <= 20; db += 3) {
                    if (!cond_coupon(ka, kb, da, db).holds) continue;
                    CHECK(cond_coupon(ka + 1, kb, da, db).holds);
                    CHECK(cond_coupon(ka, kb + 1, da, db).holds);
                }
            }
        }
    }
}

TEST_CASE("event-count condition implies the smoothed one") {
    // With delta = d and k_B >= k_A the exponents agree and the smoothed
    // count is smaller, so holding transfers.
    for (long long ka = 1; ka <= 20; ka += 2) {
        for (long long kb = ka; kb <= 20; kb += 2) {
            for (long long da = 1; da <= 20; da += 4) {
                for (long long db = 1; db <= 20; db += 4) {
                    unsigned long long count2 =
                        static_cast<unsigned long long>(ka) * da * (kb * db - 1) + 1;
                    unsigned long long count3 =
                        static_cast<unsigned long long>(da) * (db - 1) + 1;
                    if (count3 > count2) continue;
                    if (cond_coupon(ka, kb, da, db).holds)
                        CHECK(cond_coupon_dp(ka, kb, da, db).holds);
                }
            }
        }
    }
}

TEST_CASE("log-domain checkers agree with the exact-rational route") {
    int compared = 0;
    for (long long ka = 2; ka <= 20; ka += 3) {
        for (long long kb = 1; kb <= 20; kb += 3) {
            for (long long da = 1; da <= 20; da += 5) {
                for (long long db = 1; db <= 20; db += 5) {
                    // keep the exact side within 256-bit integers
                    double bits = static_cast<double>(da) * ka * std::log2(double(kb) + 1);
                    if (bits > 256) continue;

                    ConditionReport c1 = cond_transversals(ka, kb, da, db);
                    ExactConditionEval e1 = exact_cond_transversals(ka, kb, da, db);
                    CHECK(c1.rhs_log == doctest::Approx(e1.rhs_log).epsilon(1e-9));
                    CHECK(c1.holds == e1.holds);

                    ConditionReport c2 = cond_coupon(ka, kb, da, db);
                    ExactConditionEval e2 = exact_cond_coupon(ka, kb, da, db);
                    CHECK(c2.lhs_log == doctest::Approx(e2.lhs_log).epsilon(1e-9));
                    CHECK(c2.holds == e2.holds);

                    if (kb >= ka || (da * kb) % ka == 0) {
                        ConditionReport c3 = cond_coupon_dp(ka, kb, da, db);
                        ExactConditionEval e3 = exact_cond_coupon_dp(ka, kb, da, db);
                        CHECK(c3.lhs_log == doctest::Approx(e3.lhs_log).epsilon(1e-9));
                        CHECK(c3.holds == e3.holds);
                    }
                    ++compared;
                }
            }
        }
    }
    CHECK(compared > 200);
}

TEST_CASE("exact route rejects non-integer smoothed exponents") {
    // k_b < k_a and k_a does not divide delta_a * k_b
    CHECK_THROWS_AS(exact_cond_coupon_dp(3, 2, 1, 1), std::invalid_argument);
    // divisible case works: exponent = 4 * 2 / 4 = 2
    ExactConditionEval e = exact_cond_coupon_dp(4, 2, 4, 1);
    CHECK(std::isfinite(e.lhs_log));
}

TEST_CASE("reports carry the log convention and tagged values") {
    json j = condition_report_to_json(cond_coupon(10, 10, 2, 2));
    CHECK(j["log_convention"] == kLogConvention);
    CHECK(j["lhs_log"].contains("float"));
    CHECK(j["inputs"]["k_a"]["exact"] == "10");
    CHECK(j["holds"] == true);

    json local = local_report_to_json(local_sufficient(100, 200, 0.5, 30, 30));
    CHECK(local["condition"] == "LOCAL");
    CHECK(local["branch"] == "COND2");
    CHECK(local["thresholds"]["condition"] == "COR_SYMMETRIC");

    json p8 = prop8_bounds_to_json(3, prop8_bounds(3));
    CHECK(p8["lower"]["condition"] == "PROP8_LOWER");
    CHECK(p8["lower"]["value"]["exact"] == "9/2");
    CHECK(p8["upper"]["condition"] == "PROP8_UPPER");
}
