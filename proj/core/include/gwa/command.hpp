#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gwa {

/// A parsed CLI invocation. The argv layer (tools/) fills this in; `run`
/// does the work so the command surface is testable in-process.
struct Command {
    std::string name;  // limit | central | simple | endos | check-endo |
                       // bracket | jacobi | specialize | verify
    std::string a_expr;
    std::int64_t conductor = 1;
    std::string lambda_expr;
    std::string pair_expr;  // "g1,g2" with g in {h, x, y} or an h-expression
    std::string format = "text";
    std::uint64_t seed = 12345;
    // check-endo parameters
    std::string kind;
    std::string gamma_expr;
    std::string b_expr = "1";
    std::string c_expr = "1";
    std::int64_t n = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
};

struct RunResult {
    int exit_code = 0;   // 0 = checks pass / query answered, 1 = a check failed, 2 = usage
    std::string output;      // report, text or JSON
    std::string diagnostic;  // usage errors, for the error stream
};

RunResult run(const Command& command);

}  // namespace gwa
