// End-to-end checks of the command-line tool: output formats and the
// documented exit codes (0 ok, 1 violation, 2 usage, 3 I/O). The binary
// path arrives in the RATBASE_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratbase/words.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("RATBASE_CLI");
    REQUIRE(cli != nullptr);
    std::string command = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

} // namespace

TEST_CASE("repr and eval round-trip through their text forms") {
    auto repr = run_cli("repr -p 3 -q 2 4");
    CHECK(repr.exit_code == 0);
    CHECK(repr.output == "2,1,2\n");

    auto eval = run_cli("eval -p 3 -q 2 2,1,2");
    CHECK(eval.exit_code == 0);
    CHECK(eval.output == "4\n");

    auto compact = run_cli("eval -p 3 -q 2 10");
    CHECK(compact.output == "3/4\n");

    auto epsilon = run_cli("eval -p 3 -q 2 eps");
    CHECK(epsilon.output == "0\n");

    auto negative = run_cli("eval -p 4 -q 3 -- -1");
    CHECK(negative.exit_code == 0);
    CHECK(negative.output == "-1/3\n");

    auto zero = run_cli("repr -p 3 -q 2 0");
    CHECK(zero.output == "\xce\xb5\n");
    // epsilon output parses back as the empty word
    CHECK(ratbase::parse_word("\xce\xb5", ratbase::Int(3)).empty());

    auto roundtrip = run_cli("repr -p 7 -q 3 86 --roundtrip");
    CHECK(roundtrip.exit_code == 0);
    CHECK(roundtrip.output.find("value: 86\n") != std::string::npos);
}

TEST_CASE("word commands") {
    auto minw = run_cli("minword -p 3 -q 2 -n 1 -k 8");
    CHECK(minw.output == "1,0,1,1,0,0,0,1\n");

    auto states = run_cli("minword -p 3 -q 2 -n 1 -k 8 --states");
    CHECK(states.output.find("states: 2,3,5,8,12,18,27,41\n") !=
          std::string::npos);

    auto spanw = run_cli("spanword -p 3 -q 2 -n 0 -k 5");
    CHECK(spanw.output == "2,1,2,2,1\n");

    auto maxw = run_cli("maxword -p 7 -q 3 -n 0 -k 1");
    CHECK(maxw.output == "6\n");
}

TEST_CASE("transduce verdicts and exit codes") {
    for (const char* args :
         {"transduce -p 3 -q 2 -n 4 -k 32", "transduce -p 4 -q 3 -n 4 -k 32",
          "transduce -p 7 -q 3 -n 4 -k 32",
          "transduce -p 3 -q 2 -n 0 -k 0"}) {
        auto result = run_cli(args);
        CHECK(result.exit_code == 0);
        CHECK(result.output.find("MATCH\n") != std::string::npos);
    }

    auto negative_control =
        run_cli("transduce -p 3 -q 2 -n 4 -k 32 --inject-mismatch");
    CHECK(negative_control.exit_code == 1);
    CHECK(negative_control.output.find("MISMATCH\n") != std::string::npos);
}

TEST_CASE("verify reports are valid JSON with the documented schema") {
    auto result = run_cli("verify seqic -p 7 -q 3 --n-max 2000");
    CHECK(result.exit_code == 0);
    auto report = nlohmann::json::parse(result.output);
    CHECK(report["schema"] == 1);
    CHECK(report["suite"] == "seqic");
    CHECK(report["violations"] == 0);
    CHECK(report["first_counterexample"].is_null());
    CHECK(report["replay"].is_string());

    auto density = run_cli("verify density -p 7 -q 3 --n-max 500");
    CHECK(density.exit_code == 0);
    auto density_report = nlohmann::json::parse(density.output);
    CHECK(density_report["info"].contains("certificate_lo"));
}

TEST_CASE("density CSV output parses back") {
    auto result = run_cli("verify density -p 4 -q 3 --n-max 40 --format csv");
    CHECK(result.exit_code == 0);
    REQUIRE(result.output.rfind("n,k,span_lo,span_hi,spanword_prefix\r\n", 0) ==
            0);
    // quoted prefix field contains the word, parseable after unquoting
    std::string body = result.output.substr(result.output.find("\r\n") + 2);
    long rows = 0;
    std::size_t pos = 0;
    while ((pos = body.find("\r\n", pos)) != std::string::npos) {
        ++rows;
        pos += 2;
    }
    CHECK(rows == 41);
    std::size_t quote = body.find('"');
    REQUIRE(quote != std::string::npos);
    std::size_t end_quote = body.find('"', quote + 1);
    std::string word = body.substr(quote + 1, end_quote - quote - 1);
    CHECK_FALSE(ratbase::parse_word(word, ratbase::Int(4)).empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("verify unknown-suite -p 3 -q 2").exit_code == 2);
    CHECK(run_cli("verify cantor -p 4 -q 3").exit_code == 2);
    CHECK(run_cli("verify val-equal -p 3 -q 2").exit_code == 2);
    CHECK(run_cli("eval -p 6 -q 4 0").exit_code == 2);   // not coprime
    CHECK(run_cli("eval -p 2 -q 3 0").exit_code == 2);   // order violation
    CHECK(run_cli("eval -p 3 -q 2 2,x").exit_code == 2); // parse error
    CHECK(run_cli("repr -p 3 -q 2 -- -5").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("repr -p 3 4").exit_code == 2); // missing -q
}

TEST_CASE("io errors exit with 3") {
    CHECK(run_cli("repr -p 3 -q 2 4 -o /nonexistent-dir/out.txt").exit_code ==
          3);
}

TEST_CASE("export commands") {
    auto tree = run_cli("export tree -p 3 -q 2 --max-state 40");
    CHECK(tree.exit_code == 0);
    CHECK(tree.output.find("digraph") != std::string::npos);
    CHECK(tree.output.find("\"26\" -> \"40\" [label=\"2\"];") !=
          std::string::npos);

    auto balanced = run_cli("export that -p 4 -q 3 --max-state 35");
    CHECK(balanced.exit_code == 0);
    CHECK(balanced.output.find("[label=\"-1\"]") != std::string::npos);

    auto transducer = run_cli("export transducer -p 3 -q 2 --max-state 40");
    CHECK(transducer.output.find("0|0, 1|1") != std::string::npos);

    auto fractal = run_cli("export fractal -p 3 -q 2 --max-state 100");
    CHECK(fractal.output.find("<svg") != std::string::npos);

    auto empty = run_cli("export tree -p 3 -q 2 --max-state=-1");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("->") == std::string::npos);

    CHECK(run_cli("export fractal -p 3 -q 2 --format dot").exit_code == 2);
    CHECK(run_cli("export nonsense -p 3 -q 2").exit_code == 2);
}
