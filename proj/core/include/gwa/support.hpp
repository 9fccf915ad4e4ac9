#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gwa/laurent.hpp"

namespace gwa {

/// Support of a nonzero univariate Laurent polynomial
/// a(h) = a_{i_1} h^{i_1} + ... + a_{i_m} h^{i_m} with i_1 < ... < i_m = d,
/// plus the invariant k = gcd(d - i_1, ..., d - i_{m-1}) that controls
/// which roots of unity give positive-type endomorphisms (defined only
/// when m >= 2).
struct SupportData {
    std::vector<std::int64_t> exponents;  // sorted ascending
    std::vector<Scalar> coefficients;     // aligned with exponents
    std::int64_t d = 0;                   // maximal exponent
    std::int64_t m = 0;                   // number of terms
    std::optional<std::int64_t> k;
};

/// Reads support data off a nonzero polynomial over (h);
/// throws InvalidArgumentError on the zero polynomial.
SupportData support_data(const LaurentPoly& a);

}  // namespace gwa
