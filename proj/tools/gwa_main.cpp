#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwa/command.hpp"

namespace {

void add_common(CLI::App* sub, gwa::Command& cmd) {
    sub->add_option("--a", cmd.a_expr, "defining polynomial a(h), e.g. \"h^2+1\"");
    sub->add_option("--conductor", cmd.conductor,
                    "working cyclotomic conductor for root-of-unity searches");
    sub->add_option("--format", cmd.format, "output format: text or json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for a quantum generalized Weyl algebra and its "
                 "Poisson semiclassical limit"};
    app.require_subcommand(1);

    gwa::Command cmd;

    auto* limit = app.add_subcommand(
        "limit", "semiclassical Poisson bracket of a pair, computed through the "
                 "noncommutative engine");
    add_common(limit, cmd);
    limit->add_option("--pair", cmd.pair_expr, "comma-separated pair, e.g. y,x");

    auto* bracket = app.add_subcommand(
        "bracket", "Poisson bracket of a pair in the quotient algebra (biderivation path)");
    add_common(bracket, cmd);
    bracket->add_option("--pair", cmd.pair_expr, "comma-separated pair, e.g. y,x");

    auto* central = app.add_subcommand("central", "centrality suite for x*y - a(t*h)");
    add_common(central, cmd);

    auto* simple = app.add_subcommand("simple", "Poisson simplicity test with witness");
    add_common(simple, cmd);

    auto* jacobi = app.add_subcommand("jacobi", "Jacobi identity check of the bracket table");
    add_common(jacobi, cmd);

    auto* endos = app.add_subcommand(
        "endos", "classify Poisson endomorphisms: positive family, zero type, negative type");
    add_common(endos, cmd);

    auto* check = app.add_subcommand("check-endo", "verify one endomorphism candidate");
    add_common(check, cmd);
    check->add_option("--kind", cmd.kind, "positive | zero | negative")->required();
    check->add_option("--gamma", cmd.gamma_expr, "scalar gamma")->required();
    check->add_option("--b", cmd.b_expr, "scalar b (default 1)");
    check->add_option("--c", cmd.c_expr, "scalar c (default 1)");
    check->add_option("--n", cmd.n, "exponent n (positive type)");
    check->add_option("--u", cmd.u, "exponent u (negative type)");
    check->add_option("--v", cmd.v, "exponent v (negative type)");

    auto* specialize = app.add_subcommand(
        "specialize", "verify the specialized relations at a sample parameter");
    add_common(specialize, cmd);
    specialize->add_option("--lambda", cmd.lambda_expr, "nonzero scalar parameter");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--format", cmd.format, "output format: text or json");
    verify->add_option("--seed", cmd.seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cmd.name = app.get_subcommands().front()->get_name();
    gwa::RunResult result = gwa::run(cmd);
    std::cout << result.output;
    std::cerr << result.diagnostic;
    return result.exit_code;
}
