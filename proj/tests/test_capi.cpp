#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "transversal_lab.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    tvl_string_free(s);
    return out;
}

struct Handle {
    tvl_instance* ptr = nullptr;
    ~Handle() { tvl_instance_free(ptr); }
};

std::string construct(const char* spec, int force = 0) {
    char* instance_text = nullptr;
    tvl_status status = tvl_construct(spec, force, &instance_text, nullptr);
    REQUIRE(status == TVL_OK);
    return take(instance_text);
}

} // namespace

TEST_CASE("version string") {
    CHECK(std::string(tvl_version()) == "1.0.0");
}

TEST_CASE("load rejects malformed and invalid documents") {
    tvl_instance* inst = nullptr;
    char* report = nullptr;
    CHECK(tvl_instance_load("{ not json", &inst, &report) == TVL_ERR_PARSE);
    CHECK(inst == nullptr);
    json doc = json::parse(take(report));
    CHECK(doc["error"] == "parse");

    // axiom violation: empty part
    const char* empty_part = R"({
      "base_vertices": [{"id": 0, "side": "A"}, {"id": 1, "side": "B"}],
      "base_edges": [[0, 1]],
      "cover_vertices": [{"id": 0, "owner": 0}],
      "cover_edges": []
    })";
    report = nullptr;
    CHECK(tvl_instance_load(empty_part, &inst, &report) == TVL_ERR_VALIDATION);
    CHECK(inst == nullptr);
    doc = json::parse(take(report));
    CHECK(doc["ok"] == false);
    CHECK(doc["violation"] == "EmptyPart");
}

TEST_CASE("construct, load, profile, solve round trip") {
    std::string instance_text = construct(R"({"prop":"6","k":2})");
    Handle handle;
    char* report = nullptr;
    REQUIRE(tvl_instance_load(instance_text.c_str(), &handle.ptr, &report) == TVL_OK);
    json validation = json::parse(take(report));
    CHECK(validation["ok"] == true);

    json profile = json::parse(take(tvl_degree_profile(handle.ptr)));
    CHECK(profile["d_a"]["exact"] == "1");
    CHECK(profile["d_b"]["exact"] == "2");
    CHECK(profile["k_a"]["exact"] == "2");

    tvl_solve_status verdict = TVL_SOLVE_FOUND;
    char* outcome = nullptr;
    REQUIRE(tvl_solve(handle.ptr, "exact", 0, 0, 0, &verdict, &outcome) == TVL_OK);
    json out = json::parse(take(outcome));
    CHECK(verdict == TVL_SOLVE_INFEASIBLE);
    CHECK(out["status"] == "INFEASIBLE");

    // serialization round-trips byte for byte
    std::string again = take(tvl_instance_to_json(handle.ptr));
    CHECK(again == instance_text);
}

TEST_CASE("solver selection through the C surface") {
    std::string instance_text = construct(
        R"({"prop":"random","n_a":6,"n_b":6,"part_a":2,"part_b":6,"base":"circulant",
            "degree":2,"density":1.0,"seed":11})");
    Handle handle;
    REQUIRE(tvl_instance_load(instance_text.c_str(), &handle.ptr, nullptr) == TVL_OK);

    for (const char* algo : {"exact", "mt", "hyper", "hyper-random"}) {
        tvl_solve_status verdict = TVL_SOLVE_GAVE_UP;
        char* outcome = nullptr;
        REQUIRE(tvl_solve(handle.ptr, algo, 3, 0, 0, &verdict, &outcome) == TVL_OK);
        json out = json::parse(take(outcome));
        CHECK(verdict == TVL_SOLVE_FOUND);
        CHECK(out["status"] == "FOUND");
        CHECK(out["transversal"].is_array());
    }

    char* outcome = nullptr;
    CHECK(tvl_solve(handle.ptr, "simulated-annealing", 0, 0, 0, nullptr, &outcome) ==
          TVL_ERR_INVALID_ARG);
    json err = json::parse(take(outcome));
    CHECK(err["error"] == "invalid_argument");
}

TEST_CASE("condition checks through the C surface") {
    char* report = nullptr;
    REQUIRE(tvl_check_cond2(10, 10, 2, 2, &report) == TVL_OK);
    json doc = json::parse(take(report));
    CHECK(doc["holds"] == true);
    CHECK(doc["condition"] == "COND2");

    REQUIRE(tvl_check_cond1(1, 3, 1, 1, &report) == TVL_ERR_INVALID_ARG);
    tvl_string_free(report);

    REQUIRE(tvl_check_local(100, 10001, 0.5, 10, 10, &report) == TVL_OK);
    doc = json::parse(take(report));
    CHECK(doc["branch"] == "COND1");

    REQUIRE(tvl_check_prop8(2, &report) == TVL_OK);
    doc = json::parse(take(report));
    CHECK(doc["lower"]["value"]["exact"] == "2");
}

TEST_CASE("instance-level checks and analysis") {
    std::string instance_text = construct(
        R"({"prop":"random","n_a":3,"n_b":3,"part_a":2,"part_b":2,"base":"complete",
            "density":1.0,"seed":4})");
    Handle handle;
    REQUIRE(tvl_instance_load(instance_text.c_str(), &handle.ptr, nullptr) == TVL_OK);

    char* report = nullptr;
    REQUIRE(tvl_check_instance(handle.ptr, &report) == TVL_OK);
    json doc = json::parse(take(report));
    CHECK(doc.contains("cond2"));
    CHECK(doc["profile"]["k_a"]["exact"] == "2");

    REQUIRE(tvl_analyze(handle.ptr, "correlation", 0, 0, nullptr, &report) == TVL_OK);
    doc = json::parse(take(report));
    CHECK(doc["pass"] == true);

    REQUIRE(tvl_analyze(handle.ptr, "blockprob", 0, 0, nullptr, &report) == TVL_OK);
    doc = json::parse(take(report));
    CHECK(doc["probability"].contains("exact"));

    REQUIRE(tvl_analyze(handle.ptr, "deps", 0, 0, "cond2", &report) == TVL_OK);
    doc = json::parse(take(report));
    CHECK(doc["within_bound"] == true);
}

TEST_CASE("size guards surface as status codes") {
    char* instance_text = nullptr;
    CHECK(tvl_construct(R"({"prop":"4","k":4})", 0, &instance_text, nullptr) ==
          TVL_ERR_SIZE_GUARD);
    json err = json::parse(take(instance_text));
    CHECK(err["error"] == "size_guard");

    // prop 8 returns the greedy trace through the extra slot
    char* extra = nullptr;
    REQUIRE(tvl_construct(R"({"prop":"8","k":2,"a_size":3})", 0, &instance_text, &extra) ==
            TVL_OK);
    tvl_string_free(instance_text);
    json trace = json::parse(take(extra));
    CHECK(trace["trace"].size() == 4);
    CHECK(trace["trace"][0]["exact"] == "4");
}
