#pragma once

#include <cstdint>
#include <string>

#include "gwa/laurent.hpp"

namespace gwa {

struct ParserOptions {
    /// Largest conductor a z-token may name; guards against accidental
    /// huge cyclotomic computations from user input.
    std::int64_t max_conductor = 1024;
};

/// Parse an expression in the variables t and h with rational and
/// root-of-unity coefficients into canonical form. Grammar (maximal-munch
/// tokens, implicit multiplication allowed):
///
///   expr     := '-'? term (('+'|'-') term)*
///   term     := factor ('*'? factor)*
///   factor   := base ('^' int)?
///   base     := rational | zroot | 'h' | 't' | '(' expr ')'
///   rational := digits ('/' digits)?
///   zroot    := 'z' digits            (zeta with that conductor)
///   int      := '-'? digits
///
/// Negative powers apply to units only. parse(print(p)) = p.
LaurentPoly parse_poly(const std::string& text, const ParserOptions& options = {});

/// Parse an a(h) expression: t-free, returned over the single variable h.
LaurentPoly parse_a_poly(const std::string& text, const ParserOptions& options = {});

/// Parse a constant expression into a scalar.
Scalar parse_scalar(const std::string& text, const ParserOptions& options = {});

}  // namespace gwa
