#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// Sparse multivariate Laurent polynomial with Scalar coefficients.
///
/// Exponent vectors are signed machine integers indexed by the variable
/// list; no stored coefficient is zero, so equal polynomials have equal
/// term maps. The two rings used throughout are C[t^{\pm1}, h^{\pm1}]
/// (vars "t","h") and C[h^{\pm1}] (var "h").
class LaurentPoly {
  public:
    using Exponents = std::vector<std::int64_t>;
    using TermMap = std::map<Exponents, Scalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(std::vector<std::string> vars) { return LaurentPoly(std::move(vars)); }
    static LaurentPoly constant(std::vector<std::string> vars, const Scalar& c);
    static LaurentPoly monomial(std::vector<std::string> vars, Exponents exps, const Scalar& c);
    /// Single variable `name` to the power e within the given ring.
    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name,
                                std::int64_t e = 1);

    static std::vector<std::string> h_vars() { return {"h"}; }
    static std::vector<std::string> th_vars() { return {"t", "h"}; }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Units of the Laurent ring: exactly the single-term polynomials.
    bool is_unit() const { return terms_.size() == 1; }
    /// The coefficient of the given exponent vector (zero if absent).
    Scalar coeff(const Exponents& exps) const;
    Scalar constant_value() const;  // requires is_constant()

    std::size_t var_index(const std::string& name) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const Scalar& c) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    /// Integer power. Negative exponents require a unit base.
    LaurentPoly pow(std::int64_t e) const;
    /// Inverse of a unit (single-term) polynomial.
    LaurentPoly unit_inverse() const;

    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// The same polynomial over a superset variable list (matched by name).
    LaurentPoly embedded(std::vector<std::string> target_vars) const;
    /// Drop a variable that no term uses (e.g. (t,h) -> (h) for t-free input).
    LaurentPoly without_var(const std::string& name) const;

    std::string str() const;

  private:
    void add_term(const Exponents& exps, const Scalar& c);

    std::vector<std::string> vars_;
    TermMap terms_;

    friend LaurentPoly formal_derivative(const LaurentPoly&, const std::string&);
    friend LaurentPoly substitute_h(const LaurentPoly&, const LaurentPoly&, int);
    friend LaurentPoly evaluate_var(const LaurentPoly&, const std::string&, const Scalar&);
    friend LaurentPoly divide_by_t_minus_1(const LaurentPoly&);
};

/// Term-wise c*v^n -> c*n*v^(n-1), including negative n.
LaurentPoly formal_derivative(const LaurentPoly& p, const std::string& var);

/// h^n -> gamma^n * h^(e*n) with e = +1 or -1; gamma is a nonzero unit,
/// either a constant or a symbolic monomial such as t (giving a(th)).
LaurentPoly substitute_h(const LaurentPoly& p, const LaurentPoly& gamma, int e);
LaurentPoly substitute_h(const LaurentPoly& p, const Scalar& gamma, int e);

/// Evaluate one variable at a nonzero scalar; the result ring drops it.
LaurentPoly evaluate_var(const LaurentPoly& p, const std::string& var, const Scalar& value);
/// Evaluate t, collecting over the remaining variables.
LaurentPoly evaluate_t(const LaurentPoly& p, const Scalar& lambda);

/// Exact quotient p / (t-1); throws NotDivisibleError when p does not
/// vanish at t = 1. Negative t-powers are cleared by a unit shift first.
LaurentPoly divide_by_t_minus_1(const LaurentPoly& p);

/// Monic gcd in one Laurent variable. Unit h-powers never count as
/// common factors: both inputs are stripped to ordinary polynomials with
/// nonzero constant term before the Euclidean algorithm runs.
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p / d in one Laurent variable, up to unit h-powers
/// handled exactly; nullopt when d does not divide p.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Evaluate a univariate Laurent polynomial at a scalar point.
Scalar evaluate_at(const LaurentPoly& p, const Scalar& point);

std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace detail {
/// One printed summand: sign flag plus the '*'-joined body, shared by the
/// Laurent, Ore and Poisson printers.
struct PrintedTerm {
    bool negative;
    std::string body;
};
PrintedTerm print_term(const Scalar& coeff,
                       const std::vector<std::pair<std::string, std::int64_t>>& var_factors);
std::string join_terms(const std::vector<PrintedTerm>& terms);
}  // namespace detail

}  // namespace gwa
