// End-to-end checks of the tvlab binary: exit codes and report shape. The
// binary path comes from the TVLAB_BIN environment variable set by ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string binary() {
    const char* path = std::getenv("TVLAB_BIN");
    REQUIRE(path != nullptr);
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    RunResult result;
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/tvlab_test_") + name;
}

} // namespace

TEST_CASE("construct, validate, solve, verify-infeasible pipeline") {
    std::string path = temp_path("prop6_k2.json");
    RunResult r = run("construct --prop 6 --k 2 -o " + path);
    CHECK(r.exit_code == 0);

    r = run("validate " + path);
    CHECK(r.exit_code == 0);

    r = run("solve --algo exact " + path);
    CHECK(r.exit_code == 1); // INFEASIBLE
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["status"] == "INFEASIBLE");

    r = run("verify-infeasible " + path);
    CHECK(r.exit_code == 0); // non-existence verified

    r = run("solve --algo mt --seed 5 --round-cap 50 " + path);
    CHECK(r.exit_code == 2); // GAVE_UP
}

TEST_CASE("construct is deterministic and solvers replay byte-identically") {
    std::string p1 = temp_path("random_a.json");
    std::string p2 = temp_path("random_b.json");
    std::string spec =
        "construct --prop random --n-a 5 --n-b 5 --part-a 2 --part-b 4 --base complete "
        "--density 0.8 --seed 42 -o ";
    CHECK(run(spec + p1).exit_code == 0);
    CHECK(run(spec + p2).exit_code == 0);
    std::ifstream f1(p1), f2(p2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK_FALSE(s1.empty());

    RunResult once = run("solve --algo mt --seed 9 " + p1);
    RunResult twice = run("solve --algo mt --seed 9 " + p1);
    auto strip = [](const std::string& text) {
        auto doc = nlohmann::json::parse(text);
        doc.erase("stats");
        return doc.dump();
    };
    CHECK(strip(once.output) == strip(twice.output));
}

TEST_CASE("check subcommand exit codes") {
    CHECK(run("check --cond 2 --kA 10 --kB 10 --dA 2 --dB 2").exit_code == 0);
    CHECK(run("check --cond 2 --kA 2 --kB 2 --dA 2 --dB 2").exit_code == 1);
    CHECK(run("check --cond 1 --kA 1 --kB 3 --dA 1 --dB 1").exit_code == 64);
    CHECK(run("check --cond prop8 --k 3").exit_code == 0);

    RunResult local = run("check --cond local --dA 100 --dB 200 --epsilon 0.5 --kA 30 --kB 30");
    auto doc = nlohmann::json::parse(local.output);
    CHECK(doc["branch"] == "COND2");
}

TEST_CASE("malformed and missing input paths") {
    std::string bad = temp_path("bad.json");
    std::ofstream(bad) << "{ this is not json";
    CHECK(run("validate " + bad).exit_code == 65);
    CHECK(run("validate /nonexistent/really.json").exit_code == 65);
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run("construct --prop 4 --k 4").exit_code == 3); // size guard
}

TEST_CASE("bench runs a single criterion") {
    RunResult r = run("bench --suite acceptance --criterion 1");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["criterion"] == 1);
    CHECK(doc["wall_ms"].contains("float"));
}

TEST_CASE("analyze subcommand emits exact rationals") {
    std::string path = temp_path("analyze.json");
    CHECK(run("construct --prop random --n-a 2 --n-b 2 --part-a 2 --part-b 2 "
              "--base complete --density 1 --seed 3 -o " +
              path)
              .exit_code == 0);
    RunResult r = run("analyze --check correlation --vertex 0 " + path);
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["outcomes"].contains("exact"));
}
