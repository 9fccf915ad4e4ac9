#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/rational.hpp"

namespace gwa {

/// N-th cyclotomic polynomial as a dense monic coefficient vector,
/// index = power of z, degree = phi(N). Computed by exact division of
/// z^N - 1 by the product of the proper-divisor cyclotomics; memoized.
const std::vector<Rational>& cyclotomic_polynomial(std::int64_t n);

/// Exact element of the cyclotomic-rational field Q(zeta_N).
///
/// Stored as the unique reduced residue modulo the N-th cyclotomic
/// polynomial: `coeffs[i]` multiplies zeta_N^i, with coeffs.size() == phi(N).
/// Conductor 1 is the plain rationals. Values are immutable; all
/// operations return new scalars. Mixed-conductor arithmetic promotes
/// both operands to the lcm conductor via zeta_N -> zeta_lcm^(lcm/N).
class Scalar {
  public:
    Scalar() : conductor_(1), coeffs_(1, Rational(0)) {}

    static Scalar from_rational(Rational r);
    static Scalar integer(std::int64_t n) { return from_rational(Rational(static_cast<long>(n))); }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return integer(1); }
    /// zeta_N^j (j taken modulo N).
    static Scalar root_of_unity(std::int64_t n, std::int64_t j = 1);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (all zeta components vanish).
    bool is_rational() const;
    /// The rational value; requires is_rational().
    Rational rational_value() const;

    /// The same value represented at conductor m (current conductor must divide m).
    Scalar promoted(std::int64_t m) const;
    /// Best-effort representation at a smaller conductor d | conductor, if the
    /// value lies in Q(zeta_d). Solves the linear embedding system exactly.
    std::optional<Scalar> try_demote(std::int64_t d) const;
    /// Demote to conductor 1 when rational, otherwise return *this unchanged.
    Scalar simplified() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

    /// Integer power; negative exponents invert first.
    Scalar pow(std::int64_t e) const;

    /// Least e >= 1 with s^e = 1, or nullopt when s is not a root of unity.
    std::optional<std::int64_t> root_of_unity_order() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string str() const;

  private:
    Scalar(std::int64_t conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    static Scalar reduce(std::int64_t conductor, std::vector<Rational> dense);

    std::int64_t conductor_;
    std::vector<Rational> coeffs_;
};

/// Total order on scalars used only for deterministic sorting of result
/// lists (roots, enumerations); compares at a common conductor.
int scalar_compare(const Scalar& a, const Scalar& b);

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gwa
