#include "conditions.hpp"

#include <cmath>
#include <stdexcept>

namespace tvlab {

namespace {

void require_positive(std::initializer_list<std::pair<const char*, long long>> args) {
    for (auto& [name, v] : args) {
        if (v < 1)
            throw std::invalid_argument(std::string("parameter ") + name + " must be >= 1");
    }
}

// log of the exact integer k_x * d_x * (k_y * d_y - 1) + 1. The product is
// kept exact (u128) before the single log.
double log_count(long long f1, long long f2, long long inner1, long long inner2) {
    unsigned __int128 inner = static_cast<unsigned __int128>(inner1) * inner2;
    if (inner == 0) throw std::invalid_argument("count term underflow");
    inner -= 1;
    unsigned __int128 lhs = static_cast<unsigned __int128>(f1) * f2;
    if (inner != 0 && lhs > (~static_cast<unsigned __int128>(0) - 1) / inner)
        throw std::invalid_argument("parameters too large for exact count");
    unsigned __int128 count = lhs * inner + 1;
    return std::log(static_cast<long double>(count));
}

// log(1 - (1 - 1/k_b)^exponent) for a real exponent > 0.
double log_block_probability(long long k_b, double exponent) {
    if (k_b == 1) return 0.0; // probability factor is exactly 1
    double log_base = std::log1p(-1.0 / static_cast<double>(k_b));
    double powed = std::exp(exponent * log_base);
    return std::log1p(-powed);
}

json echo_inputs(std::initializer_list<std::pair<const char*, long long>> args) {
    json j;
    for (auto& [name, v] : args) j[name] = tag_int(v);
    return j;
}

} // namespace

json condition_report_to_json(const ConditionReport& r) {
    json j;
    j["condition"] = r.id;
    j["holds"] = r.holds;
    j["lhs_log"] = tag_float(r.lhs_log);
    j["rhs_log"] = tag_float(r.rhs_log);
    j["tolerance"] = tag_float(kLogTolerance);
    j["log_convention"] = kLogConvention;
    j["inputs"] = r.inputs;
    if (!r.extra.is_null()) j["advisory"] = r.extra;
    return j;
}

ConditionReport cond_transversals(long long k_a, long long k_b, long long d_a, long long d_b) {
    require_positive({{"k_a", k_a}, {"k_b", k_b}, {"d_a", d_a}, {"d_b", d_b}});
    if (k_a < 2) throw std::invalid_argument("condition 1 needs k_a >= 2");

    ConditionReport r;
    r.id = "COND1";
    r.lhs_log = std::log(static_cast<double>(k_b));
    r.rhs_log = std::log(static_cast<double>(d_a)) +
                (1.0 + std::log(static_cast<double>(k_a)) +
                 std::log(static_cast<double>(d_b))) /
                    static_cast<double>(k_a - 1);
    r.holds = r.lhs_log >= r.rhs_log - kLogTolerance;
    r.inputs = echo_inputs({{"k_a", k_a}, {"k_b", k_b}, {"d_a", d_a}, {"d_b", d_b}});

    // Equal part sizes and a degree-1 A side reduce to the star regime:
    // d_b <= k^(k-2)/e suffices.
    if (k_a == k_b && d_a == 1) {
        double star = std::exp(static_cast<double>(k_a - 2) *
                                   std::log(static_cast<double>(k_a)) -
                               1.0);
        json advisory;
        advisory["condition"] = "COR_ASYM_STAR";
        advisory["max_b_degree"] = tag_float(star);
        advisory["holds"] =
            std::log(static_cast<double>(d_b)) <= std::log(star) + kLogTolerance;
        r.extra = advisory;
    }
    return r;
}

ConditionReport cond_coupon(long long k_a, long long k_b, long long d_a, long long d_b) {
    require_positive({{"k_a", k_a}, {"k_b", k_b}, {"d_a", d_a}, {"d_b", d_b}});
    ConditionReport r;
    r.id = "COND2";
    r.lhs_log = 1.0 + log_count(k_a, d_a, k_b, d_b) +
                static_cast<double>(k_a) *
                    log_block_probability(k_b, static_cast<double>(d_a));
    r.rhs_log = 0.0;
    r.holds = r.lhs_log <= r.rhs_log + kLogTolerance;
    r.inputs = echo_inputs({{"k_a", k_a}, {"k_b", k_b}, {"d_a", d_a}, {"d_b", d_b}});
    return r;
}

ConditionReport cond_coupon_dp(long long k_a, long long k_b, long long delta_a,
                               long long delta_b) {
    require_positive(
        {{"k_a", k_a}, {"k_b", k_b}, {"delta_a", delta_a}, {"delta_b", delta_b}});
    ConditionReport r;
    r.id = "COND3";
    double exponent = static_cast<double>(delta_a) *
                      std::min(1.0, static_cast<double>(k_b) / static_cast<double>(k_a));
    r.lhs_log = 1.0 + log_count(delta_a, 1, delta_b, 1) +
                static_cast<double>(k_a) * log_block_probability(k_b, exponent);
    r.rhs_log = 0.0;
    r.holds = r.lhs_log <= r.rhs_log + kLogTolerance;
    r.inputs = echo_inputs(
        {{"k_a", k_a}, {"k_b", k_b}, {"delta_a", delta_a}, {"delta_b", delta_b}});
    r.extra = json{{"exponent", tag_float(exponent)}};
    return r;
}

LocalReport local_sufficient(long long d_a, long long d_b, double epsilon,
                             long long k_a, long long k_b) {
    require_positive({{"k_a", k_a}, {"k_b", k_b}});
    if (d_a < 2 || d_b < 2)
        throw std::invalid_argument("local check needs d_a, d_b >= 2 (ln d must be positive)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");

    LocalReport r;
    r.epsilon = epsilon;
    r.d_a = d_a;
    r.d_b = d_b;
    r.k_a = k_a;
    r.k_b = k_b;

    long long da = d_a, db = d_b, ka = k_a, kb = k_b;
    if (db < da) {
        std::swap(da, db);
        std::swap(ka, kb);
        r.swapped = true;
    }
    r.branch = (static_cast<unsigned __int128>(da) * da <= static_cast<unsigned __int128>(db))
                   ? 1
                   : 2;
    if (r.branch == 1 && ka < 2) {
        r.invoked_valid = false;
        r.invoked.id = "COND1";
        r.invoked.holds = false;
    } else {
        r.invoked = r.branch == 1 ? cond_transversals(ka, kb, da, db)
                                  : cond_coupon(ka, kb, da, db);
    }

    auto threshold = [epsilon](long long d) {
        long double t = (1.0L + static_cast<long double>(epsilon)) *
                        static_cast<long double>(d) /
                        std::log(static_cast<long double>(d));
        return static_cast<long long>(std::ceil(t));
    };
    r.threshold_a = threshold(d_a);
    r.threshold_b = threshold(d_b);
    return r;
}

json local_report_to_json(const LocalReport& r) {
    json j;
    j["condition"] = "LOCAL";
    j["holds"] = r.invoked_valid && r.invoked.holds;
    j["branch"] = r.branch == 1 ? "COND1" : "COND2";
    j["sides_swapped"] = r.swapped;
    j["invoked"] = r.invoked_valid ? condition_report_to_json(r.invoked)
                                   : json{{"condition", r.invoked.id},
                                          {"holds", false},
                                          {"note", "inputs invalid for this branch"}};
    j["thresholds"] = json{{"condition", "COR_SYMMETRIC"},
                           {"side_a", tag_int(r.threshold_a)},
                           {"side_b", tag_int(r.threshold_b)}};
    j["log_convention"] = kLogConvention;
    j["inputs"] = json{{"d_a", tag_int(r.d_a)},
                       {"d_b", tag_int(r.d_b)},
                       {"epsilon", tag_float(r.epsilon)},
                       {"k_a", tag_int(r.k_a)},
                       {"k_b", tag_int(r.k_b)}};
    return j;
}

Prop8Bounds prop8_bounds(long long k) {
    if (k < 2) throw std::invalid_argument("prop8 bounds need k >= 2");
    BigUint factorial(1);
    for (long long i = 2; i <= k; ++i) factorial *= BigUint(static_cast<uint64_t>(i));
    BigUint k_to_k = BigUint::pow(BigUint(static_cast<uint64_t>(k)), static_cast<uint64_t>(k));
    Prop8Bounds b;
    b.lower = Rational(k_to_k, factorial);
    Rational upper_rat(k_to_k * BigUint(static_cast<uint64_t>(k)), factorial);
    b.upper = upper_rat.to_double() * std::log(static_cast<double>(k));
    return b;
}

json prop8_bounds_to_json(long long k, const Prop8Bounds& b) {
    json j;
    j["condition"] = "PROP8";
    j["inputs"] = json{{"k", tag_int(k)}};
    j["lower"] = json{{"condition", "PROP8_LOWER"},
                      {"value", tag_exact(b.lower)},
                      {"meaning", "covers with fewer A-vertices always admit a transversal"}};
    j["upper"] = json{{"condition", "PROP8_UPPER"},
                      {"value", tag_float(b.upper)},
                      {"meaning", "at this many A-vertices some cover has none"}};
    j["log_convention"] = kLogConvention;
    return j;
}

json conditions_for_profile(const DegreeProfile& p) {
    json j;
    j["profile"] = degree_profile_to_json(p);
    auto guarded = [](auto&& fn) -> json {
        try {
            return condition_report_to_json(fn());
        } catch (const std::invalid_argument& e) {
            return json{{"holds", false}, {"note", e.what()}};
        }
    };
    j["cond1"] = guarded([&] { return cond_transversals(p.k_a, p.k_b, p.d_a, p.d_b); });
    j["cond2"] = guarded([&] { return cond_coupon(p.k_a, p.k_b, p.d_a, p.d_b); });
    j["cond3"] = guarded([&] { return cond_coupon_dp(p.k_a, p.k_b, p.delta_a, p.delta_b); });
    return j;
}

} // namespace tvlab
