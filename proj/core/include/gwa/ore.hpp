#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>

#include "gwa/laurent.hpp"
#include "gwa/support.hpp"

namespace gwa {

class OreElement;

namespace detail {
struct DeltaCache;  // memo for the y-past-x rewriting, defined in ore.cpp
}

/// Defining datum of the algebra family: a nonzero, non-invertible
/// a(h) in C[h^{\pm1}] (at least two terms), together with the working
/// cyclotomic conductor used when enumerating roots of unity.
class GWAParams {
  public:
    explicit GWAParams(LaurentPoly a, std::int64_t conductor = 1);

    const LaurentPoly& a() const { return a_; }                // over (h)
    const LaurentPoly& a_prime() const { return a_prime_; }    // over (h)
    const LaurentPoly& a_th() const { return a_th_; }          // a(th) over (t,h)
    const LaurentPoly& delta_x() const { return delta_x_; }    // a(h) - a(th) over (t,h)
    const SupportData& support() const { return support_; }
    std::int64_t conductor() const { return conductor_; }

    /// delta(x^i) in normal form, memoized; thread-safe.
    OreElement delta_power(std::int64_t i) const;

  private:
    LaurentPoly a_;
    LaurentPoly a_prime_;
    LaurentPoly a_th_;
    LaurentPoly delta_x_;
    SupportData support_;
    std::int64_t conductor_;
    std::shared_ptr<detail::DeltaCache> cache_;
};

/// Normal-ordered monomial key c * t^t_exp h^h_exp x^x_deg y^y_deg.
/// Ordered by (x, y, t, h) so map iteration is deterministic.
struct OreKey {
    std::int64_t t_exp = 0;
    std::int64_t h_exp = 0;
    std::int64_t x_deg = 0;
    std::int64_t y_deg = 0;

    friend bool operator==(const OreKey&, const OreKey&) = default;
    friend bool operator<(const OreKey& a, const OreKey& b) {
        if (a.x_deg != b.x_deg) return a.x_deg < b.x_deg;
        if (a.y_deg != b.y_deg) return a.y_deg < b.y_deg;
        if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
        return a.h_exp < b.h_exp;
    }
};

/// Element of the iterated Ore extension B = F[h^{\pm1}][x; alpha][y; beta, delta]
/// with F = C[t^{\pm1}], alpha(h) = th, beta(h) = t^{-1}h, beta(x) = x,
/// delta(h) = 0, delta(x) = a(h) - a(th), held in the PBW basis
/// {t^a h^b x^i y^j}. Immutable value type.
class OreElement {
  public:
    using TermMap = std::map<OreKey, Scalar>;

    OreElement() = default;

    static OreElement zero() { return {}; }
    static OreElement one() { return monomial({}, Scalar::one()); }
    static OreElement monomial(const OreKey& key, const Scalar& c);
    static OreElement x() { return monomial({0, 0, 1, 0}, Scalar::one()); }
    static OreElement y() { return monomial({0, 0, 0, 1}, Scalar::one()); }
    static OreElement h(std::int64_t e = 1) { return monomial({0, e, 0, 0}, Scalar::one()); }
    static OreElement t(std::int64_t e = 1) { return monomial({e, 0, 0, 0}, Scalar::one()); }
    /// Embed a coefficient polynomial over (h) or (t,h).
    static OreElement from_laurent(const LaurentPoly& p);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const OreKey& key) const;

    OreElement operator-() const;
    OreElement operator+(const OreElement& rhs) const;
    OreElement operator-(const OreElement& rhs) const;
    OreElement operator*(const Scalar& c) const;
    OreElement& operator+=(const OreElement& rhs) { return *this = *this + rhs; }
    OreElement& operator-=(const OreElement& rhs) { return *this = *this - rhs; }

    bool operator==(const OreElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const OreElement& rhs) const { return !(*this == rhs); }

    std::string str() const;

    void add_term(const OreKey& key, const Scalar& c);

  private:
    TermMap terms_;
};

/// Product in B, rewritten to the PBW basis. Bilinear over the rules
/// x (t^a h^b) = t^(a+b) h^b x, y (t^a h^b) = t^(a-b) h^b y, and
/// y x^i = x^i y + delta(x^i).
OreElement ore_mul(const OreElement& f, const OreElement& g, const GWAParams& params);

/// fg - gf.
OreElement commutator(const OreElement& f, const OreElement& g, const GWAParams& params);

/// Integer power of an element (non-negative exponent).
OreElement ore_pow(const OreElement& f, std::int64_t e, const GWAParams& params);

struct CentralityReport {
    bool central = false;
    std::string witness_generator;  // generator whose commutator is nonzero
    OreElement witness;             // the first nonzero commutator
};

/// Checks commutators against h, h^{-1}, x, y; these generate B over
/// C[t^{\pm1}] and t is central, so vanishing is sufficient.
CentralityReport is_central(const OreElement& f, const GWAParams& params);

/// xy - a(th), the central element of the algebra.
OreElement central_element(const GWAParams& params);

struct SpecializationResult {
    OreElement element;
    /// Set when lambda = 1 or lambda is a root of unity, i.e. lambda lies
    /// outside the deformation parameter set.
    bool parameter_warning = false;
};

/// Evaluate every t-power at lambda != 0; the result has t-exponent 0
/// throughout and obeys the specialized relations with q = lambda.
SpecializationResult specialize(const OreElement& f, const Scalar& lambda,
                                const GWAParams& params);

std::string to_string(const OreElement& f);
std::ostream& operator<<(std::ostream& os, const OreElement& f);

}  // namespace gwa
