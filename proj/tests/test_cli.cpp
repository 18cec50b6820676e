#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "comax/commands.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the installed binary (path from COMAX_BIN) with stderr separated.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("COMAX_BIN");
    REQUIRE(bin != nullptr);
    const std::string command =
        (env_prefix.empty() ? "" : env_prefix + " ") + std::string(bin) + " " + args +
        " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("poly command emits the expected polynomials") {
    CHECK(run_cli("poly 30 di structured --format text").output ==
          "8x + x^6 + x^8 + x^10 + x^15\n");
    CHECK(run_cli("poly 7 di closed --format text").output == "7x\n");

    const RunResult json_run = run_cli("poly 36 di closed");
    CHECK(json_run.exit_code == 0);
    const auto j = nlohmann::json::parse(json_run.output);
    CHECK(j["n"] == 36);
    CHECK(j["coefficients"].size() == 3);

    // literal variant differs from the derivation for n = 36 independence
    const RunResult printed = run_cli("poly 36 independence as-printed --format text");
    const RunResult derived = run_cli("poly 36 independence structured --format text");
    CHECK(printed.exit_code == 0);
    CHECK(printed.output != derived.output);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string a = run_cli("analyze 77 independence").output;
    const std::string b = run_cli("analyze 77 independence").output;
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("verify reports agreement and expected printed mismatches") {
    const RunResult r5 = run_cli("verify 5 5 --format json");
    CHECK(r5.exit_code == 0);
    const auto j5 = nlohmann::json::parse(r5.output);
    CHECK(j5["derivation_mismatches"] == 0);

    const RunResult r36 = run_cli("verify 36 36 --format json");
    CHECK(r36.exit_code == 0);
    const auto j36 = nlohmann::json::parse(r36.output);
    CHECK(j36["derivation_mismatches"] == 0);
    CHECK(j36["printed_mismatches"] == 1);
}

TEST_CASE("exit codes distinguish precondition failures") {
    CHECK(run_cli("poly 210 di closed").exit_code == 2);  // unsupported shape
    CHECK(run_cli("poly 9999 di oracle").exit_code == 2);  // over the oracle limit
    CHECK(run_cli("poly 1 di closed").exit_code == 2);
    CHECK(run_cli("poly 30 di structured").exit_code == 0);
    CHECK(run_cli("poly").exit_code == 2);         // missing arguments
    CHECK(run_cli("poly abc di closed").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("scan emits one row per n") {
    const RunResult csv = run_cli("scan 2 12 di --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("n,shape,unimodal,oscillation,log_concave,gamma_i,alpha\n") == 0);
    CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 12);
    CHECK(csv.output.find("6,pq,true,") != std::string::npos);  // 2x+x^2+x^3 is unimodal
}

TEST_CASE("export artifacts") {
    CHECK(run_cli("export 5 roots-csv").output == "re,im,residual\n0,0,0\n");
    const RunResult dot = run_cli("export 16 graph-dot");
    CHECK(dot.output.find("graph comaximal_16") == 0);
    const RunResult svg = run_cli("export 77 roots-svg --kind independence");
    CHECK(svg.output.find("<svg") == 0);
    CHECK(run_cli("export 5 bogus").exit_code == 2);
}

TEST_CASE("environment variable fallback with flag override") {
    // env limit blocks the oracle, flag re-enables it
    CHECK(run_cli("poly 30 di oracle", "COMAX_ORACLE_LIMIT_MIS=10").exit_code == 2);
    CHECK(run_cli("poly 30 di oracle --oracle-limit-mis 40", "COMAX_ORACLE_LIMIT_MIS=10")
              .exit_code == 0);
}
