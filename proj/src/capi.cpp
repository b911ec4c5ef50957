#include "transversal_lab.h"

#include <cstring>
#include <new>
#include <string>

#include "analysis.hpp"
#include "bench.hpp"
#include "conditions.hpp"
#include "constructions.hpp"
#include "cover.hpp"
#include "hypergraph.hpp"
#include "json_io.hpp"
#include "solvers.hpp"

using namespace tvlab;

struct tvl_instance {
    CoverInstance cover;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** slot, const json& doc) {
    if (slot != nullptr) *slot = dup_string(dump_report(doc));
}

json error_doc(const char* kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

// Uniform exception -> status mapping for every entry point.
template <typename Fn>
tvl_status guarded(char** report_slot, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        emit(report_slot, error_doc("parse", e.what()));
        return TVL_ERR_PARSE;
    } catch (const SizeGuardError& e) {
        emit(report_slot, error_doc("size_guard", e.what()));
        return TVL_ERR_SIZE_GUARD;
    } catch (const std::invalid_argument& e) {
        emit(report_slot, error_doc("invalid_argument", e.what()));
        return TVL_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        emit(report_slot, error_doc("internal", e.what()));
        return TVL_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* tvl_version(void) { return "1.0.0"; }

void tvl_string_free(char* s) { delete[] s; }

tvl_status tvl_instance_load(const char* json_text, tvl_instance** out, char** report_json) {
    if (out == nullptr) return TVL_ERR_INVALID_ARG;
    *out = nullptr;
    if (json_text == nullptr) {
        emit(report_json, error_doc("invalid_argument", "null instance text"));
        return TVL_ERR_INVALID_ARG;
    }
    return guarded(report_json, [&]() -> tvl_status {
        CoverInstance inst = instance_from_json_text(json_text);
        ValidationReport report = validate_cover(inst);
        emit(report_json, validation_report_to_json(report));
        if (!report.ok) return TVL_ERR_VALIDATION;
        *out = new tvl_instance{std::move(inst)};
        return TVL_OK;
    });
}

void tvl_instance_free(tvl_instance* inst) { delete inst; }

char* tvl_instance_to_json(const tvl_instance* inst) {
    if (inst == nullptr) return nullptr;
    return dup_string(dump_report(instance_to_json(inst->cover)));
}

char* tvl_degree_profile(const tvl_instance* inst) {
    if (inst == nullptr) return nullptr;
    return dup_string(dump_report(degree_profile_to_json(degree_profile(inst->cover))));
}

tvl_status tvl_check_cond1(int64_t k_a, int64_t k_b, int64_t d_a, int64_t d_b,
                           char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json, condition_report_to_json(cond_transversals(k_a, k_b, d_a, d_b)));
        return TVL_OK;
    });
}

tvl_status tvl_check_cond2(int64_t k_a, int64_t k_b, int64_t d_a, int64_t d_b,
                           char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json, condition_report_to_json(cond_coupon(k_a, k_b, d_a, d_b)));
        return TVL_OK;
    });
}

tvl_status tvl_check_cond3(int64_t k_a, int64_t k_b, int64_t delta_a, int64_t delta_b,
                           char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json,
             condition_report_to_json(cond_coupon_dp(k_a, k_b, delta_a, delta_b)));
        return TVL_OK;
    });
}

tvl_status tvl_check_local(int64_t d_a, int64_t d_b, double epsilon, int64_t k_a,
                           int64_t k_b, char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json, local_report_to_json(local_sufficient(d_a, d_b, epsilon, k_a, k_b)));
        return TVL_OK;
    });
}

tvl_status tvl_check_prop8(int64_t k, char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json, prop8_bounds_to_json(k, prop8_bounds(k)));
        return TVL_OK;
    });
}

tvl_status tvl_check_instance(const tvl_instance* inst, char** report_json) {
    if (inst == nullptr) return TVL_ERR_INVALID_ARG;
    return guarded(report_json, [&]() -> tvl_status {
        emit(report_json, conditions_for_profile(degree_profile(inst->cover)));
        return TVL_OK;
    });
}

tvl_status tvl_solve(const tvl_instance* inst, const char* algo, uint64_t seed,
                     uint64_t budget, uint64_t round_cap, tvl_solve_status* solve_status,
                     char** outcome_json) {
    if (inst == nullptr || algo == nullptr) return TVL_ERR_INVALID_ARG;
    return guarded(outcome_json, [&]() -> tvl_status {
        const std::string name(algo);
        if (budget == 0) budget = kDefaultNodeBudget;
        SolveOutcome outcome;
        if (name == "exact") {
            outcome = solve_exact(inst->cover, budget);
        } else if (name == "mt") {
            outcome = solve_moser_tardos(inst->cover, seed, round_cap);
        } else if (name == "hyper") {
            outcome = solve_via_hypergraph(inst->cover, HypergraphMode::Exact, seed, budget,
                                           round_cap);
        } else if (name == "hyper-random") {
            outcome = solve_via_hypergraph(inst->cover, HypergraphMode::Randomized, seed,
                                           budget, round_cap);
        } else {
            throw std::invalid_argument("unknown algorithm: " + name);
        }
        if (solve_status != nullptr) {
            switch (outcome.status) {
                case SolveStatus::Found: *solve_status = TVL_SOLVE_FOUND; break;
                case SolveStatus::Infeasible: *solve_status = TVL_SOLVE_INFEASIBLE; break;
                case SolveStatus::GaveUp: *solve_status = TVL_SOLVE_GAVE_UP; break;
            }
        }
        emit(outcome_json, solve_outcome_to_json(outcome));
        return TVL_OK;
    });
}

tvl_status tvl_construct(const char* spec_json, int force, char** instance_json,
                         char** extra_json) {
    if (spec_json == nullptr || instance_json == nullptr) return TVL_ERR_INVALID_ARG;
    *instance_json = nullptr;
    if (extra_json != nullptr) *extra_json = nullptr;
    return guarded(instance_json, [&]() -> tvl_status {
        json spec = json::parse(spec_json, nullptr, false);
        if (spec.is_discarded() || !spec.is_object())
            throw ParseError("construction spec must be a JSON object");
        if (!spec.contains("prop") || !spec["prop"].is_string())
            throw std::invalid_argument("construction spec needs string field 'prop'");
        auto get_int = [&](const char* key, long long fallback,
                           bool required = false) -> long long {
            if (!spec.contains(key)) {
                if (required)
                    throw std::invalid_argument(std::string("construction spec needs '") +
                                                key + "'");
                return fallback;
            }
            if (!spec[key].is_number_integer())
                throw std::invalid_argument(std::string("field '") + key +
                                            "' must be an integer");
            return spec[key].get<long long>();
        };
        const std::string prop = spec["prop"].get<std::string>();
        const bool forced = force != 0;
        CoverInstance inst;
        if (prop == "4") {
            inst = build_prop4(get_int("k", 0, true), forced);
        } else if (prop == "6") {
            inst = build_prop6(get_int("k", 0, true), forced);
        } else if (prop == "7") {
            inst = build_prop7(get_int("d", 0, true), forced);
        } else if (prop == "8") {
            GreedyCoverResult g =
                build_prop8_greedy(get_int("k", 0, true), get_int("a_size", 0, true), forced);
            inst = std::move(g.instance);
            if (extra_json != nullptr)
                emit(extra_json, json{{"trace", greedy_trace_to_json(g)}});
        } else if (prop == "random") {
            RandomCoverParams params;
            params.n_a = static_cast<int>(get_int("n_a", 1));
            params.n_b = static_cast<int>(get_int("n_b", 1));
            params.part_a = static_cast<int>(get_int("part_a", 1));
            params.part_b = static_cast<int>(get_int("part_b", 1));
            params.circulant_degree = static_cast<int>(get_int("degree", 2));
            params.seed = static_cast<uint64_t>(get_int("seed", 0));
            if (spec.contains("density")) params.density = spec["density"].get<double>();
            if (spec.contains("gnp_p")) params.gnp_p = spec["gnp_p"].get<double>();
            std::string base = spec.value("base", std::string("complete"));
            if (base == "complete") {
                params.base = RandomCoverParams::BaseKind::Complete;
            } else if (base == "gnp") {
                params.base = RandomCoverParams::BaseKind::Gnp;
            } else if (base == "circulant") {
                params.base = RandomCoverParams::BaseKind::Circulant;
            } else {
                throw std::invalid_argument("base must be complete, gnp, or circulant");
            }
            inst = random_cover(params);
        } else {
            throw std::invalid_argument("prop must be one of 4, 6, 7, 8, random");
        }
        *instance_json = dup_string(dump_report(instance_to_json(inst)));
        return TVL_OK;
    });
}

tvl_status tvl_analyze(const tvl_instance* inst, const char* check, int64_t vertex,
                       int64_t cover_vertex, const char* mode_or_null, char** report_json) {
    if (inst == nullptr || check == nullptr) return TVL_ERR_INVALID_ARG;
    return guarded(report_json, [&]() -> tvl_status {
        const std::string name(check);
        if (name == "blockprob") {
            Rational pr = exact_block_probability(inst->cover, static_cast<int>(vertex),
                                                  static_cast<int>(cover_vertex));
            emit(report_json, json{{"check", "blockprob"},
                                   {"vertex", vertex},
                                   {"cover_vertex", cover_vertex},
                                   {"probability", tag_exact(pr)},
                                   {"probability_float", tag_float(pr.to_double())}});
        } else if (name == "correlation") {
            emit(report_json, correlation_report_to_json(verify_negative_correlation(
                                  inst->cover, static_cast<int>(vertex))));
        } else if (name == "deps") {
            const std::string mode = mode_or_null == nullptr ? "cond3" : mode_or_null;
            DependencyCount::Mode m;
            if (mode == "cond3") {
                m = DependencyCount::Mode::SharedBaseNeighbor;
            } else if (mode == "cond2") {
                m = DependencyCount::Mode::SharedRelevantPart;
            } else {
                throw std::invalid_argument("deps mode must be cond2 or cond3");
            }
            emit(report_json, dependency_count_to_json(
                                  dependency_count(inst->cover, static_cast<int>(vertex), m)));
        } else {
            throw std::invalid_argument("check must be blockprob, correlation, or deps");
        }
        return TVL_OK;
    });
}

tvl_status tvl_bench(int criterion, char** report_json) {
    return guarded(report_json, [&]() -> tvl_status {
        if (criterion == 0) {
            emit(report_json, run_acceptance_suite());
        } else {
            emit(report_json, criterion_result_to_json(run_criterion(criterion)));
        }
        return TVL_OK;
    });
}

} // extern "C"
