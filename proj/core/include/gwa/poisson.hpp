#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gwa/ore.hpp"

namespace gwa {

/// Monomial key h^h_exp x^x_deg y^y_deg of the commutative ring
/// C[h^{\pm1}, x, y]; ordered by (x, y, h).
struct PoissonKey {
    std::int64_t h_exp = 0;
    std::int64_t x_deg = 0;
    std::int64_t y_deg = 0;

    friend bool operator==(const PoissonKey&, const PoissonKey&) = default;
    friend bool operator<(const PoissonKey& a, const PoissonKey& b) {
        if (a.x_deg != b.x_deg) return a.x_deg < b.x_deg;
        if (a.y_deg != b.y_deg) return a.y_deg < b.y_deg;
        return a.h_exp < b.h_exp;
    }
};

/// Element of B_1 = C[h^{\pm1}, x, y], canonical sparse form.
class PoissonElement {
  public:
    using TermMap = std::map<PoissonKey, Scalar>;

    PoissonElement() = default;

    static PoissonElement zero() { return {}; }
    static PoissonElement one() { return monomial({}, Scalar::one()); }
    static PoissonElement monomial(const PoissonKey& key, const Scalar& c);
    static PoissonElement constant(const Scalar& c) { return monomial({}, c); }
    static PoissonElement x() { return monomial({0, 1, 0}, Scalar::one()); }
    static PoissonElement y() { return monomial({0, 0, 1}, Scalar::one()); }
    static PoissonElement h(std::int64_t e = 1) { return monomial({e, 0, 0}, Scalar::one()); }
    static PoissonElement from_laurent(const LaurentPoly& p);  // over (h)

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PoissonElement operator-() const;
    PoissonElement operator+(const PoissonElement& rhs) const;
    PoissonElement operator-(const PoissonElement& rhs) const;
    PoissonElement operator*(const PoissonElement& rhs) const;
    PoissonElement operator*(const Scalar& c) const;
    PoissonElement& operator+=(const PoissonElement& rhs) { return *this = *this + rhs; }
    PoissonElement& operator-=(const PoissonElement& rhs) { return *this = *this - rhs; }
    PoissonElement& operator*=(const PoissonElement& rhs) { return *this = *this * rhs; }

    /// Integer power; negative exponents require a unit monomial base.
    PoissonElement pow(std::int64_t e) const;

    bool operator==(const PoissonElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const PoissonElement& rhs) const { return !(*this == rhs); }

    std::string str() const;

    void add_term(const PoissonKey& key, const Scalar& c);

  private:
    TermMap terms_;
};

PoissonElement partial_h(const PoissonElement& f);  // formal Laurent derivative
PoissonElement partial_x(const PoissonElement& f);
PoissonElement partial_y(const PoissonElement& f);

/// Substitute h -> h_img, x -> x_img, y -> y_img. Negative h-powers
/// require h_img to be a unit monomial.
PoissonElement substitute(const PoissonElement& f, const PoissonElement& h_img,
                          const PoissonElement& x_img, const PoissonElement& y_img);

/// Generator bracket table: the values {x,h}, {y,h}, {y,x}; the other
/// pairs follow by antisymmetry and brackets with constants vanish.
struct BracketSpec {
    PoissonElement xh;  // {x, h}
    PoissonElement yh;  // {y, h}
    PoissonElement yx;  // {y, x}

    /// {x,h} = hx, {y,h} = -hy, {y,x} = -a'(h)h.
    static BracketSpec for_gwa(const GWAParams& params);
    static BracketSpec all_zero() { return {}; }
};

/// The unique biderivation extending the spec:
/// {f,g} = sum over generator pairs (u,v) of (df/du)(dg/dv) {u,v}.
PoissonElement bracket(const PoissonElement& f, const PoissonElement& g,
                       const BracketSpec& spec);

struct JacobiReport {
    bool ok = false;
    PoissonElement residual;  // J(h, x, y) when nonzero
};

/// Jacobi identity on the generator triple (h, x, y); sufficient for a
/// biderivation bracket on this ring.
JacobiReport jacobi_check(const BracketSpec& spec);

/// A derivation given by its values on the generators.
struct DerivationData {
    PoissonElement at_h;
    PoissonElement at_x;
    PoissonElement at_y;
};

/// df/dh * D(h) + df/dx * D(x) + df/dy * D(y).
PoissonElement apply_derivation(const PoissonElement& f, const DerivationData& d);

struct PskeCheckItem {
    std::string name;
    bool ok = false;
    PoissonElement residual;
};

struct PskeReport {
    bool ok = false;
    std::vector<PskeCheckItem> items;
};

/// Checks that (alpha, delta) make the claimed bracket a Poisson
/// polynomial extension of the base C[h^{\pm1}][x]:
///  - alpha preserves the base bracket {x,h},
///  - the skew compatibility identity
///    delta({a,b}) - {delta(a),b} - {a,delta(b)} = alpha(a)delta(b) - delta(a)alpha(b)
///    on generator pairs (defect maps are biderivations, so that suffices),
///  - the spec rows {y,h} and {y,x} agree with alpha(.)y + delta(.).
PskeReport pske_check(const BracketSpec& spec, const DerivationData& alpha,
                      const DerivationData& delta);

/// Coset representative in A_1 = B_1 / <xy - a(h)>: every monomial with
/// min(x_deg, y_deg) = m > 0 is rewritten with a(h)^m in its place, so
/// representatives are free of mixed x,y monomials.
class GWAElement {
  public:
    GWAElement() = default;

    const PoissonElement& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    GWAElement operator-() const;
    GWAElement operator+(const GWAElement& rhs) const;
    GWAElement operator-(const GWAElement& rhs) const;
    GWAElement operator*(const Scalar& c) const;

    bool operator==(const GWAElement& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const GWAElement& rhs) const { return !(*this == rhs); }

    std::string str() const { return value_.str(); }

  private:
    explicit GWAElement(PoissonElement v) : value_(std::move(v)) {}
    friend GWAElement gwa_reduce(const PoissonElement&, const GWAParams&);
    friend std::map<std::int64_t, GWAElement> grade_decompose(const GWAElement&);

    PoissonElement value_;
};

GWAElement gwa_reduce(const PoissonElement& f, const GWAParams& params);
GWAElement gwa_mul(const GWAElement& f, const GWAElement& g, const GWAParams& params);

/// Bracket in B_1 followed by reduction; well defined on cosets because
/// xy - a(h) is Poisson central.
GWAElement gwa_bracket(const GWAElement& f, const GWAElement& g, const GWAParams& params);

/// Split by degree x_deg - y_deg (deg h = 0, deg x = 1, deg y = -1);
/// zero components are omitted.
std::map<std::int64_t, GWAElement> grade_decompose(const GWAElement& f);

/// f -> {f, h} h^{-1}; homogeneous elements of degree k are eigenvectors
/// with eigenvalue k.
GWAElement eigen_map(const GWAElement& f, const GWAParams& params);

/// Bracket of f with each of h, x, y vanishes.
bool is_poisson_central(const PoissonElement& f, const BracketSpec& spec);

std::string to_string(const PoissonElement& f);
std::string to_string(const GWAElement& f);
std::ostream& operator<<(std::ostream& os, const PoissonElement& f);
std::ostream& operator<<(std::ostream& os, const GWAElement& f);

}  // namespace gwa
