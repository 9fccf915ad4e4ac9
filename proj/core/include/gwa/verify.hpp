#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gwa {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, or a short summary when passing
};

/// Runs the full verification suite over the built-in test polynomial
/// set; every equality is exact. The seed drives the randomized parts.
std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed);

}  // namespace gwa
