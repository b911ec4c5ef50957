// tvlab: command-line front end for the transversal_lab library. Every
// subcommand prints a JSON document on stdout; exit codes are documented per
// subcommand (64 = usage error, 65 = malformed instance file).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "transversal_lab.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitBadInstance = 65;

std::string take(char* s) {
    if (s == nullptr) return {};
    std::string out(s);
    tvl_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct InstanceHandle {
    tvl_instance* ptr = nullptr;
    ~InstanceHandle() { tvl_instance_free(ptr); }
};

// Loads and validates; prints the failure report and returns the exit code
// on error (65 for parse problems, 1 for axiom violations).
int load_instance(const std::string& path, InstanceHandle& handle) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cannot read instance file: " << path << "\n";
        return kExitBadInstance;
    }
    char* report = nullptr;
    tvl_status status = tvl_instance_load(text.c_str(), &handle.ptr, &report);
    std::string report_text = take(report);
    if (status == TVL_OK) return 0;
    std::cout << report_text;
    return status == TVL_ERR_VALIDATION ? 1 : kExitBadInstance;
}

bool force_requested(bool flag) {
    if (flag) return true;
    const char* env = std::getenv("TRANSVERSAL_LAB_FORCE");
    return env != nullptr && std::string(env) == "1";
}

int status_to_exit(tvl_status status) {
    switch (status) {
        case TVL_OK: return 0;
        case TVL_ERR_PARSE: return kExitBadInstance;
        case TVL_ERR_INVALID_ARG: return kExitUsage;
        case TVL_ERR_SIZE_GUARD: return 3;
        default: return 4;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent transversals of bipartite correspondence covers"};
    app.require_subcommand(1);

    // validate: exit 0 = passes all cover axioms, 1 = violation, 65 = malformed
    auto* cmd_validate = app.add_subcommand("validate", "check the cover axioms");
    std::string validate_file;
    cmd_validate->add_option("file", validate_file, "instance JSON")->required();

    // check: exit 0 = condition holds, 1 = does not hold, 64 = bad parameters
    auto* cmd_check = app.add_subcommand("check", "evaluate a sufficiency condition");
    std::string cond;
    int64_t kA = 0, kB = 0, dA = 0, dB = 0, deltaA = 0, deltaB = 0, prop8_k = 0;
    double epsilon = 0.0;
    cmd_check->add_option("--cond", cond, "1|2|3|local|prop8")->required();
    cmd_check->add_option("--kA", kA);
    cmd_check->add_option("--kB", kB);
    cmd_check->add_option("--dA", dA);
    cmd_check->add_option("--dB", dB);
    cmd_check->add_option("--deltaA", deltaA);
    cmd_check->add_option("--deltaB", deltaB);
    cmd_check->add_option("--epsilon", epsilon);
    cmd_check->add_option("--k", prop8_k);

    // solve: exit 0 = FOUND, 1 = INFEASIBLE, 2 = GAVE_UP
    auto* cmd_solve = app.add_subcommand("solve", "search for an independent transversal");
    std::string solve_algo = "exact", solve_file, hyper_mode = "exact";
    uint64_t seed = 0, budget = 0, round_cap = 0;
    cmd_solve->add_option("--algo", solve_algo, "exact|mt|hyper")->required();
    cmd_solve->add_option("--seed", seed, "RNG seed (mt, hyper random mode)");
    cmd_solve->add_option("--budget", budget, "node budget for exact search");
    cmd_solve->add_option("--round-cap", round_cap, "resampling round cap");
    cmd_solve->add_option("--hyper-mode", hyper_mode, "exact|random (with --algo hyper)");
    cmd_solve->add_option("file", solve_file, "instance JSON")->required();

    // construct: exit 0 on success; 3 = size guard (use --force)
    auto* cmd_construct = app.add_subcommand("construct", "generate an instance");
    std::string prop, out_path, base = "complete";
    int64_t gen_k = 0, gen_d = 0, a_size = 0;
    int64_t n_a = 1, n_b = 1, part_a = 1, part_b = 1, degree = 2;
    double density = 1.0, gnp_p = 0.5;
    uint64_t gen_seed = 0;
    bool force = false, print_trace = false;
    cmd_construct->add_option("--prop", prop, "4|6|7|8|random")->required();
    cmd_construct->add_option("--k", gen_k);
    cmd_construct->add_option("--d", gen_d);
    cmd_construct->add_option("--a-size", a_size);
    cmd_construct->add_option("--seed", gen_seed);
    cmd_construct->add_option("--n-a", n_a);
    cmd_construct->add_option("--n-b", n_b);
    cmd_construct->add_option("--part-a", part_a);
    cmd_construct->add_option("--part-b", part_b);
    cmd_construct->add_option("--base", base, "complete|gnp|circulant");
    cmd_construct->add_option("--density", density);
    cmd_construct->add_option("--gnp-p", gnp_p);
    cmd_construct->add_option("--degree", degree, "circulant degree");
    cmd_construct->add_option("-o,--output", out_path, "write instance here (default stdout)");
    cmd_construct->add_flag("--force", force, "override size guards");
    cmd_construct->add_flag("--trace", print_trace, "print the greedy trace (prop 8)");

    // verify-infeasible: exit 0 = verified infeasible, 1 = transversal found,
    // 2 = budget exhausted
    auto* cmd_verify = app.add_subcommand("verify-infeasible",
                                          "confirm no independent transversal exists");
    std::string verify_file;
    uint64_t verify_budget = 0;
    cmd_verify->add_option("--budget", verify_budget, "node budget for exact search");
    cmd_verify->add_option("file", verify_file, "instance JSON")->required();

    // analyze: exit 0 = report produced (correlation: 0 = pass, 1 = violation)
    auto* cmd_analyze = app.add_subcommand("analyze", "exact probability analysis");
    std::string analyze_check, analyze_file, dep_mode = "cond3";
    int64_t vertex = 0, cover_vertex = 0;
    cmd_analyze->add_option("--check", analyze_check, "blockprob|correlation|deps")->required();
    cmd_analyze->add_option("--vertex", vertex, "A-side base vertex (dense id)");
    cmd_analyze->add_option("--cover-vertex", cover_vertex, "cover vertex (blockprob)");
    cmd_analyze->add_option("--mode", dep_mode, "cond2|cond3 (deps)");
    cmd_analyze->add_option("file", analyze_file, "instance JSON")->required();

    // bench: exit 0 = every criterion passed, 1 otherwise
    auto* cmd_bench = app.add_subcommand("bench", "run the verification battery");
    std::string suite = "acceptance";
    int criterion = 0;
    cmd_bench->add_option("--suite", suite, "acceptance");
    cmd_bench->add_option("--criterion", criterion, "run a single criterion (1-10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_validate->parsed()) {
        InstanceHandle inst;
        int rc = load_instance(validate_file, inst);
        if (rc != 0) return rc;
        std::cout << "{\n  \"ok\": true\n}\n";
        return 0;
    }

    if (cmd_check->parsed()) {
        char* report = nullptr;
        tvl_status status;
        if (cond == "1") {
            status = tvl_check_cond1(kA, kB, dA, dB, &report);
        } else if (cond == "2") {
            status = tvl_check_cond2(kA, kB, dA, dB, &report);
        } else if (cond == "3") {
            status = tvl_check_cond3(kA, kB, deltaA, deltaB, &report);
        } else if (cond == "local") {
            status = tvl_check_local(dA, dB, epsilon, kA, kB, &report);
        } else if (cond == "prop8") {
            status = tvl_check_prop8(prop8_k, &report);
        } else {
            std::cerr << "--cond must be 1, 2, 3, local, or prop8\n";
            return kExitUsage;
        }
        std::string text = take(report);
        std::cout << text;
        if (status != TVL_OK) return kExitUsage;
        // exit 1 when the condition is evaluated but does not hold
        if (cond != "prop8") {
            auto doc = nlohmann::json::parse(text, nullptr, false);
            if (!doc.is_object() || !doc.value("holds", false)) return 1;
        }
        return 0;
    }

    if (cmd_solve->parsed()) {
        InstanceHandle inst;
        int rc = load_instance(solve_file, inst);
        if (rc != 0) return rc;
        std::string algo = solve_algo;
        if (algo == "hyper" && hyper_mode == "random") algo = "hyper-random";
        char* outcome = nullptr;
        tvl_solve_status verdict = TVL_SOLVE_GAVE_UP;
        tvl_status status =
            tvl_solve(inst.ptr, algo.c_str(), seed, budget, round_cap, &verdict, &outcome);
        std::cout << take(outcome);
        if (status != TVL_OK) return status_to_exit(status);
        return static_cast<int>(verdict);
    }

    if (cmd_construct->parsed()) {
        nlohmann::json spec;
        spec["prop"] = prop;
        if (cmd_construct->count("--k") != 0) spec["k"] = gen_k;
        if (cmd_construct->count("--d") != 0) spec["d"] = gen_d;
        if (cmd_construct->count("--a-size") != 0) spec["a_size"] = a_size;
        if (prop == "random") {
            spec["n_a"] = n_a;
            spec["n_b"] = n_b;
            spec["part_a"] = part_a;
            spec["part_b"] = part_b;
            spec["base"] = base;
            spec["density"] = density;
            spec["gnp_p"] = gnp_p;
            spec["degree"] = degree;
            spec["seed"] = static_cast<int64_t>(gen_seed);
        }
        char* instance_text = nullptr;
        char* extra = nullptr;
        tvl_status status = tvl_construct(spec.dump().c_str(),
                                          force_requested(force) ? 1 : 0, &instance_text,
                                          &extra);
        std::string doc = take(instance_text);
        std::string extra_text = take(extra);
        if (status != TVL_OK) {
            std::cout << doc; // error document
            return status_to_exit(status);
        }
        if (out_path.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return 4;
            }
            out << doc;
        }
        if (print_trace && !extra_text.empty()) std::cout << extra_text;
        return 0;
    }

    if (cmd_verify->parsed()) {
        InstanceHandle inst;
        int rc = load_instance(verify_file, inst);
        if (rc != 0) return rc;
        char* outcome = nullptr;
        tvl_solve_status verdict = TVL_SOLVE_GAVE_UP;
        tvl_status status = tvl_solve(inst.ptr, "exact", 0, verify_budget, 0, &verdict,
                                      &outcome);
        std::cout << take(outcome);
        if (status != TVL_OK) return status_to_exit(status);
        switch (verdict) {
            case TVL_SOLVE_INFEASIBLE: return 0; // non-existence verified
            case TVL_SOLVE_FOUND: return 1;      // claim refuted
            default: return 2;
        }
    }

    if (cmd_analyze->parsed()) {
        InstanceHandle inst;
        int rc = load_instance(analyze_file, inst);
        if (rc != 0) return rc;
        char* report = nullptr;
        tvl_status status = tvl_analyze(inst.ptr, analyze_check.c_str(), vertex, cover_vertex,
                                        dep_mode.c_str(), &report);
        std::string text = take(report);
        std::cout << text;
        if (status != TVL_OK) return status_to_exit(status);
        if (analyze_check == "correlation") {
            auto doc = nlohmann::json::parse(text, nullptr, false);
            if (!doc.is_object() || !doc.value("pass", false)) return 1;
        }
        return 0;
    }

    if (cmd_bench->parsed()) {
        if (suite != "acceptance") {
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitUsage;
        }
        char* report = nullptr;
        tvl_status status = tvl_bench(criterion, &report);
        std::string text = take(report);
        std::cout << text;
        if (status != TVL_OK) return status_to_exit(status);
        auto doc = nlohmann::json::parse(text, nullptr, false);
        bool all_pass = doc.is_object() &&
                        doc.value(criterion == 0 ? "all_pass" : "pass", false);
        return all_pass ? 0 : 1;
    }

    return kExitUsage;
}
