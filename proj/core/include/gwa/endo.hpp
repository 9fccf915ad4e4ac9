#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/poisson.hpp"

namespace gwa {

/// Poisson-simplicity of the quotient algebra: simple iff every root of
/// a(h) is simple, witnessed by gcd(a, a') (unit h-powers ignored).
struct SimplicityResult {
    bool simple = false;
    LaurentPoly witness;  // monic gcd(a, a'); the constant 1 when simple
};

SimplicityResult simplicity_test(const GWAParams& params);

enum class EndoKind { positive, zero, negative };

std::string to_string(EndoKind kind);

/// A classified Poisson endomorphism of the quotient algebra.
///
/// positive:  h -> gamma h,      x -> b h^n x,  y -> gamma^d b^{-1} h^{-n} y
/// zero:      h -> gamma,        x -> 0,        y -> 0
/// negative:  h -> gamma h^{-1}, x -> c h^v y,  y -> b h^u x
struct Endomorphism {
    EndoKind kind = EndoKind::positive;
    Scalar gamma = Scalar::one();
    Scalar b = Scalar::one();
    Scalar c = Scalar::one();
    std::int64_t n = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;

    static Endomorphism positive(Scalar gamma, Scalar b, std::int64_t n);
    static Endomorphism zero_type(Scalar gamma);
    static Endomorphism negative(Scalar gamma, Scalar b, Scalar c, std::int64_t u,
                                 std::int64_t v);
    static Endomorphism identity() { return positive(Scalar::one(), Scalar::one(), 0); }

    std::string str() const;
};

/// Generator images of a candidate map, as coset representatives.
struct EndoImages {
    GWAElement h_img;
    GWAElement x_img;
    GWAElement y_img;
};

EndoImages images_of(const Endomorphism& psi, const GWAParams& params);

/// Apply the map determined by the images to an arbitrary element.
GWAElement apply_endomorphism(const EndoImages& images, const GWAElement& f,
                              const GWAParams& params);

struct EndoCheckItem {
    std::string name;
    bool ok = false;
    GWAElement residual;
};

struct EndoCheckReport {
    bool ok = false;
    std::vector<EndoCheckItem> items;
};

/// Substitutes the images into the four defining equations
/// {x,h} = hx, {y,h} = -hy, {y,x} = -a'(h)h, xy = a(h)
/// and reports each residual in the quotient algebra.
EndoCheckReport check_images(const EndoImages& images, const GWAParams& params);
EndoCheckReport check_endomorphism(const Endomorphism& psi, const GWAParams& params);

/// The positive-type family for the given a(h): gamma ranges over the
/// k-th roots of unity with k = gcd(d - i_1, ..., d - i_{m-1}); b and n
/// are free, instantiated from caller-supplied samples.
struct PositiveFamily {
    std::int64_t k = 1;
    std::vector<Scalar> gammas;            // all k-th roots of unity, sorted
    std::vector<Endomorphism> instances;   // gammas x samples
};

PositiveFamily enumerate_positive(
    const GWAParams& params,
    const std::vector<std::pair<Scalar, std::int64_t>>& bn_samples = {
        {Scalar::one(), 0}});

/// Best-effort exact root extraction over the working cyclotomic field:
/// linear factors, rational-root candidates, then root-of-unity
/// candidates at the working conductor. Whatever resists extraction is
/// returned as the residual factor.
struct RootExtraction {
    std::vector<Scalar> roots;  // with multiplicity, sorted
    LaurentPoly residual;       // monic; constant 1 when fully split
};

RootExtraction extract_roots(const LaurentPoly& p, std::int64_t conductor);

/// Zero-type endomorphisms: one for each root of gcd(a, a') found in the
/// working field. An empty root list with unit certificate proves there
/// are none at all; a non-unit residual marks roots outside the field.
struct ZeroTypeResult {
    LaurentPoly certificate;  // monic gcd(a, a')
    std::vector<Scalar> roots;
    LaurentPoly residual;
    std::vector<Endomorphism> endomorphisms;
};

ZeroTypeResult find_zero_type(const GWAParams& params);

/// One admissible negative-type parameter choice: gamma together with the
/// forced product bc; the (b,c) and (u,v) splits stay free.
struct NegativeSolution {
    Scalar gamma;
    Scalar bc;
    Endomorphism sample;  // b = bc, c = 1, u = s, v = 0
};

/// Solutions of bc h^(u+v) a(h) = a(gamma h^{-1}).
struct NegativeSolutionSet {
    bool feasible = false;      // support of a(h) must be symmetric
    std::int64_t s = 0;         // u + v = -(i_1 + i_m) when feasible
    std::int64_t g = 0;         // combined constraint gamma^g = c0
    Scalar c0 = Scalar::one();
    Scalar btilde_factor = Scalar::one();  // bc = btilde_factor * gamma^btilde_exponent
    std::int64_t btilde_exponent = 0;
    std::vector<NegativeSolution> solutions;
    LaurentPoly residual_constraint;  // unsolved part of z^g - c0
};

NegativeSolutionSet solve_negative(const GWAParams& params);

/// compose(f, g) applies g first: (f o g)(w) = f(g(w)); the result is
/// re-classified from its images.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g, const GWAParams& params);

/// Inverse of a positive- or negative-type map; zero-type maps are not
/// injective and raise InvalidArgumentError.
Endomorphism invert(const Endomorphism& psi, const GWAParams& params);

bool is_identity(const Endomorphism& psi, const GWAParams& params);
bool same_endomorphism(const Endomorphism& a, const Endomorphism& b, const GWAParams& params);

}  // namespace gwa
