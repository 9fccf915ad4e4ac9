#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "gwa/command.hpp"

using namespace gwa;

namespace {

struct ProcessResult {
    int exit_code;
    std::string output;
};

// Run the real binary; stderr is folded into the stream so usage
// diagnostics are observable.
ProcessResult run_binary(const std::string& args) {
    std::string cmd = std::string(GWA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 512> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("in-process run: documented queries") {
    RunResult simple = run({.name = "simple", .a_expr = "(h-1)^2"});
    CHECK(simple.exit_code == 0);
    CHECK(simple.output.find("false") != std::string::npos);
    CHECK(simple.output.find("h - 1") != std::string::npos);

    RunResult limit = run({.name = "limit", .a_expr = "h^2+1", .pair_expr = "y,x"});
    CHECK(limit.exit_code == 0);
    CHECK(limit.output.find("-2*h^2") != std::string::npos);

    RunResult endos = run({.name = "endos", .a_expr = "h^2+1"});
    CHECK(endos.exit_code == 0);
    CHECK(endos.output.find("\"k\":2") != std::string::npos);
}

TEST_CASE("in-process run: exit-code contract") {
    CHECK(run({.name = "jacobi", .a_expr = "h^2+1"}).exit_code == 0);
    CHECK(run({.name = "central", .a_expr = "h^2+h"}).exit_code == 0);
    CHECK(run({.name = "check-endo",
               .a_expr = "h^2+1",
               .kind = "positive",
               .gamma_expr = "2"})
              .exit_code == 1);
    CHECK(run({.name = "wat"}).exit_code == 2);
    CHECK(run({.name = "simple", .a_expr = "h^+2"}).exit_code == 2);
    CHECK(run({.name = "simple"}).exit_code == 2);
    CHECK(run({.name = "simple", .a_expr = "h^5"}).exit_code == 2);  // invertible a(h)
    CHECK(run({.name = "limit", .a_expr = "h^2+1"}).exit_code == 2);  // missing --pair
    CHECK(run({.name = "simple", .a_expr = "h^2+1", .format = "yaml"}).exit_code == 2);
}

TEST_CASE("JSON output is byte-identical across runs") {
    Command cmd{.name = "endos", .a_expr = "(h^2+1)^2", .conductor = 4, .format = "json"};
    RunResult first = run(cmd);
    RunResult second = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"schema\":1") != std::string::npos);
    CHECK(first.output.find("\"conductor\":4") != std::string::npos);
}

TEST_CASE("binary: subcommands, formats and exit codes") {
    ProcessResult simple = run_binary("simple --a \"(h-1)^2\" --format json");
    CHECK(simple.exit_code == 0);
    CHECK(simple.output.find("\"witness\":\"h - 1\"") != std::string::npos);

    ProcessResult limit = run_binary("limit --a \"h^2+1\" --pair y,x");
    CHECK(limit.exit_code == 0);
    CHECK(limit.output.find("-2*h^2") != std::string::npos);

    ProcessResult fail = run_binary("check-endo --a \"h^2+1\" --kind positive --gamma 2");
    CHECK(fail.exit_code == 1);

    ProcessResult usage = run_binary("simple");
    CHECK(usage.exit_code == 2);

    ProcessResult unknown_flag = run_binary("simple --a \"h^2+1\" --frobnicate");
    CHECK(unknown_flag.exit_code == 2);

    ProcessResult unknown_cmd = run_binary("transmogrify");
    CHECK(unknown_cmd.exit_code == 2);

    ProcessResult help = run_binary("--help");
    CHECK(help.exit_code == 0);

    ProcessResult specialize = run_binary("specialize --a \"h^2+h\" --lambda 2");
    CHECK(specialize.exit_code == 0);

    ProcessResult warn = run_binary("specialize --a \"h^2+h\" --lambda 1");
    CHECK(warn.exit_code == 0);
    CHECK(warn.output.find("warning") != std::string::npos);

    // bracket works in the quotient: {x, y^2} for a = h^2+1 is 4h^2*y
    ProcessResult bracket = run_binary("bracket --a \"h^2+1\" --pair \"x,y^2\"");
    CHECK(bracket.exit_code == 2);  // y^2 is not a plain generator or h-expression
    ProcessResult bracket2 = run_binary("bracket --a \"h^2+1\" --pair y,x");
    CHECK(bracket2.exit_code == 0);
    CHECK(bracket2.output.find("-2*h^2") != std::string::npos);
    ProcessResult bracket3 = run_binary("bracket --a \"h^2+1\" --pair \"x,h^2\"");
    CHECK(bracket3.exit_code == 0);
    CHECK(bracket3.output.find("2*h^2*x") != std::string::npos);

    // conductor promotion exposes the cyclotomic zero-type roots
    ProcessResult endos4 = run_binary("endos --a \"(h^2+1)^2\" --conductor 4 --format json");
    CHECK(endos4.exit_code == 0);
    CHECK(endos4.output.find("\"roots\":[\"-z4\",\"z4\"]") != std::string::npos);

    ProcessResult verify = run_binary("verify --seed 7");
    CHECK(verify.exit_code == 0);
}
