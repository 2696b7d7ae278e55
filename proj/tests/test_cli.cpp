#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parikh/cli.hpp"
#include "parikh/oracle.hpp"

using nlohmann::json;

namespace {

struct CliOutcome {
    int code;
    std::string out;
    std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = parikh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

const char* kC6Json = R"({"x":["x1","x2","x3"],"y":["y1","y2","y3"],)"
                      R"("edges":[["x1","y1"],["x1","y2"],["x2","y2"],["x2","y3"],)"
                      R"(["x3","y3"],["x3","y1"]]})";

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("build emits the worked-example graph as stable JSON") {
    auto result = run_cli({"build", "bbccabdc", "--format", "json"});
    REQUIRE(result.code == 0);
    json g = json::parse(result.out);
    CHECK(g["x"].size() + g["y"].size() == 8);
    CHECK(g["edges"].size() == 10);
    // stable under re-serialization
    CHECK(json::parse(g.dump()).dump() == g.dump());
}

TEST_CASE("build emits DOT with one rank per part") {
    auto result = run_cli({"build", "abb", "--format", "dot"});
    REQUIRE(result.code == 0);
    CHECK(result.out.find("graph parikh {") != std::string::npos);
    CHECK(result.out.find("\"a:1\" -- \"b:1\"") != std::string::npos);
    CHECK(std::count(result.out.begin(), result.out.end(), '\n') >= 5);
}

TEST_CASE("recognize answers false for the six-cycle") {
    auto path = write_temp("parikh_cli_c6.json", kC6Json);
    auto result = run_cli({"recognize", "--input", path.string()});
    REQUIRE(result.code == 0);
    json verdict = json::parse(result.out);
    CHECK(verdict["representable"] == false);
    CHECK(verdict["word"].is_null());
    std::filesystem::remove(path);
}

TEST_CASE("recognize with a fixed arity") {
    auto path = write_temp("parikh_cli_star.json",
                           R"({"x":["c"],"y":["l1","l2","l3"],)"
                           R"("edges":[["c","l1"],["c","l2"],["c","l3"]]})");
    auto result = run_cli({"recognize", "--input", path.string(), "--arity", "2"});
    REQUIRE(result.code == 0);
    json verdict = json::parse(result.out);
    CHECK(verdict["representable"] == true);
    CHECK(verdict["arity"] == 2);
    CHECK(verdict["word"] == "abbb");
    std::filesystem::remove(path);
}

TEST_CASE("build piped into recognize round-trips") {
    for (const std::string& word : {"abab", "bbccabdc", "ba", "decdebcdabcab"}) {
        auto built = run_cli({"build", word});
        REQUIRE(built.code == 0);
        auto path = write_temp("parikh_cli_roundtrip.json", built.out);
        auto verdict = run_cli({"recognize", "--input", path.string()});
        REQUIRE(verdict.code == 0);
        CAPTURE(word);
        CHECK(json::parse(verdict.out)["representable"] == true);
        std::filesystem::remove(path);
    }
}

TEST_CASE("synthesize reports the word and trace") {
    auto built = run_cli({"build", "abab"});
    auto path = write_temp("parikh_cli_p4.json", built.out);
    auto result = run_cli({"synthesize", "--input", path.string(), "--trace"});
    REQUIRE(result.code == 0);
    json out = json::parse(result.out);
    CHECK(out["word"] == "abab");
    CHECK(out["trace"]["steps"].size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("synthesize fails with exit 1 on a non-representable graph") {
    auto path = write_temp("parikh_cli_c6b.json", kC6Json);
    auto result = run_cli({"synthesize", "--input", path.string()});
    CHECK(result.code == 1);
    CHECK(result.err.find("not representable") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("diameter, hamiltonian, slender, longest-path, compose, core") {
    auto diameter = run_cli({"diameter", "bbccabdc"});
    REQUIRE(diameter.code == 0);
    json d = json::parse(diameter.out);
    CHECK(d["diameter"] == 5);
    CHECK(d["applicable_bound"] == 9);
    CHECK(d["bound_source"] == "general");

    auto ham = run_cli({"hamiltonian", "abbc"});
    REQUIRE(ham.code == 0);
    CHECK(json::parse(ham.out)["hamiltonian"] == true);

    auto count = run_cli({"slender", "--size", "4", "--count"});
    REQUIRE(count.code == 0);
    CHECK(count.out == "5\n");

    auto slender = run_cli({"slender", "--size", "4"});
    json s = json::parse(slender.out);
    CHECK(s["classes"].size() == 5);
    CHECK(s["classes"][0]["word"] == "abcd");

    auto longest = run_cli({"longest-path", "--arity", "3"});
    json lp = json::parse(longest.out);
    CHECK(lp["word"] == "bcabcab");
    CHECK(lp["path_length"] == 6);

    auto compose = run_cli({"compose", "ab", "ab"});
    CHECK(compose.out == "cdab\n");

    auto core = run_cli({"core", "bacbbabcccbac", "cca"});
    CHECK(core.out == "cccca\n");
}

TEST_CASE("verify subcommand lists, passes and fails") {
    auto listed = run_cli({"verify", "--list"});
    REQUIRE(listed.code == 0);
    CHECK(listed.out.find("edge-count") != std::string::npos);
    CHECK(listed.out.find("round-trip") != std::string::npos);

    auto pass = run_cli({"verify", "--suite", "edge-count", "--max-len", "4"});
    CHECK(pass.code == 0);
    CHECK(pass.err.find("pass") != std::string::npos);

    auto focused = run_cli({"verify", "--suite", "edge-count", "--max-len", "4", "--focus", "ab"});
    CHECK(focused.code == 0);
    CHECK(focused.err.find("3 inputs checked") != std::string::npos);

    auto unknown = run_cli({"verify", "--suite", "nope"});
    CHECK(unknown.code == 2);

    auto over_cap = run_cli({"verify", "--suite", "edge-count", "--max-len", "40"});
    CHECK(over_cap.code == 2);
    CHECK(over_cap.err.find("capacity") != std::string::npos);
}

TEST_CASE("environment caps apply and flags win") {
    auto big = run_cli({"build", "abcdefgh"});
    auto path = write_temp("parikh_cli_wide.json", big.out);
    setenv("PARIKH_MAX_VERTICES", "4", 1);
    auto capped = run_cli({"recognize", "--input", path.string()});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("capacity") != std::string::npos);
    auto overridden = run_cli({"recognize", "--input", path.string(), "--max-vertices", "14"});
    CHECK(overridden.code == 0);
    unsetenv("PARIKH_MAX_VERTICES");
    std::filesystem::remove(path);
}

TEST_CASE("verify exits 1 when a suite finds counterexamples") {
    parikh::register_suite("always-broken", [](const parikh::EnumerationSpec& spec,
                                               parikh::SuiteResult& result) {
        if (spec.focus && *spec.focus != "fixture")
            return;
        ++result.checked;
        result.reports.push_back({"always-broken", "fixture", "truth", "lies",
                                  "parikh verify --suite always-broken --focus 'fixture'"});
    });
    auto failing = run_cli({"verify", "--suite", "always-broken"});
    CHECK(failing.code == 1);
    json report = json::parse(failing.out);
    CHECK(report["input"] == "fixture");
    CHECK(report["repro"].get<std::string>().find("--focus") != std::string::npos);
}

TEST_CASE("usage and domain errors exit with code 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"build"}).code == 2);                  // missing word
    CHECK(run_cli({"build", "a!b"}).code == 2);           // bad letters
    CHECK(run_cli({"build", "abc", "--alphabet-size", "2"}).code == 2);
    CHECK(run_cli({"hamiltonian", "abcd"}).code == 2);    // arity 4 unsupported
    CHECK(run_cli({"core", "abc", ""}).code == 2);        // empty pattern
    auto bad_json = write_temp("parikh_cli_bad.json", "{\"x\": 3}");
    CHECK(run_cli({"recognize", "--input", bad_json.string()}).code == 2);
    std::filesystem::remove(bad_json);
    CHECK(run_cli({"recognize", "--input", "/no/such/file.json"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_SUITE_END();
