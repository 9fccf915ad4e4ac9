#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwa/parse.hpp"
#include "gwa/semiclassical.hpp"

using namespace gwa;

namespace {

PoissonElement H() { return PoissonElement::h(); }
PoissonElement X() { return PoissonElement::x(); }
PoissonElement Y() { return PoissonElement::y(); }

PoissonElement random_element(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> n(1, max_terms);
    std::uniform_int_distribution<std::int64_t> he(-2, 2);
    std::uniform_int_distribution<std::int64_t> d(0, 2);
    std::uniform_int_distribution<int> c(-3, 3);
    PoissonElement out;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) {
        int coeff = c(rng);
        if (coeff == 0) coeff = 2;
        out += PoissonElement::monomial({he(rng), d(rng), d(rng)}, Scalar::integer(coeff));
    }
    return out;
}

}  // namespace

TEST_CASE("bracket on generators follows the spec table") {
    GWAParams params(parse_a_poly("h^2+1"));
    BracketSpec spec = BracketSpec::for_gwa(params);
    CHECK(bracket(X(), H(), spec) == H() * X());
    CHECK(bracket(Y(), H(), spec) == -(H() * Y()));
    // {y,x} = -a'(h)h = -2h^2
    CHECK(bracket(Y(), X(), spec) == PoissonElement::monomial({2, 0, 0}, Scalar::integer(-2)));
    // Leibniz: {x, h^2} = 2h{x,h} = 2h^2 x
    CHECK(bracket(X(), H() * H(), spec) ==
          PoissonElement::monomial({2, 1, 0}, Scalar::integer(2)));
}

TEST_CASE("bracket is antisymmetric and satisfies Leibniz") {
    GWAParams params(parse_a_poly("h^2+h"));
    BracketSpec spec = BracketSpec::for_gwa(params);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        PoissonElement f = random_element(rng);
        PoissonElement g = random_element(rng);
        PoissonElement k = random_element(rng);
        CHECK(bracket(f, f, spec).is_zero());
        CHECK(bracket(f, g, spec) == -bracket(g, f, spec));
        CHECK(bracket(f * g, k, spec) == f * bracket(g, k, spec) + bracket(f, k, spec) * g);
    }
}

TEST_CASE("jacobi_check") {
    GWAParams params(parse_a_poly("h^2+1"));
    CHECK(jacobi_check(BracketSpec::for_gwa(params)).ok);
    CHECK(jacobi_check(BracketSpec::all_zero()).ok);

    BracketSpec corrupted = BracketSpec::for_gwa(params);
    corrupted.yx = X();
    JacobiReport r = jacobi_check(corrupted);
    CHECK(!r.ok);
    CHECK(r.residual == H() * X());
}

TEST_CASE("pske_check accepts the induced pair and flags corruptions") {
    GWAParams params(parse_a_poly("h^2+1"));
    BracketSpec spec = BracketSpec::for_gwa(params);
    PoissonElement minus_aprime_h = PoissonElement::monomial({2, 0, 0}, Scalar::integer(-2));

    DerivationData beta1{-H(), PoissonElement::zero(), PoissonElement::zero()};
    DerivationData delta1{PoissonElement::zero(), minus_aprime_h, PoissonElement::zero()};
    CHECK(pske_check(spec, beta1, delta1).ok);

    DerivationData zero{};
    CHECK(pske_check(BracketSpec::all_zero(), zero, zero).ok);

    // Dropping the h factor from delta_1(x) no longer reproduces {y,x}.
    DerivationData corrupted{PoissonElement::zero(),
                             PoissonElement::monomial({1, 0, 0}, Scalar::integer(-2)),
                             PoissonElement::zero()};
    PskeReport r = pske_check(spec, beta1, corrupted);
    CHECK(!r.ok);
    bool consistency_flagged = false;
    for (const auto& item : r.items)
        if (!item.ok && item.name.find("{y,x}") != std::string::npos) consistency_flagged = true;
    CHECK(consistency_flagged);
}

TEST_CASE("gwa_reduce computes the coset representative") {
    GWAParams params(parse_a_poly("h^2+1"));
    // xy -> a(h)
    CHECK(gwa_reduce(X() * Y(), params) ==
          gwa_reduce(PoissonElement::from_laurent(params.a()), params));
    // x^2 y -> (h^2+1) x
    CHECK(gwa_reduce(X() * X() * Y(), params) ==
          gwa_reduce(PoissonElement::from_laurent(params.a()) * X(), params));
    // already reduced
    PoissonElement x3 = X().pow(3);
    CHECK(gwa_reduce(x3, params).value() == x3);
    // no mixed monomials survive
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        GWAElement r = gwa_reduce(random_element(rng), params);
        for (const auto& [k, c] : r.value().terms()) CHECK(k.x_deg * k.y_deg == 0);
    }
}

TEST_CASE("gwa_reduce is idempotent and multiplicative on cosets") {
    GWAParams params(parse_a_poly("h^2+h"));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 25; ++i) {
        PoissonElement f = random_element(rng);
        PoissonElement g = random_element(rng);
        GWAElement rf = gwa_reduce(f, params);
        CHECK(gwa_reduce(rf.value(), params) == rf);
        CHECK(gwa_reduce(f * g, params) ==
              gwa_reduce(rf.value() * gwa_reduce(g, params).value(), params));
    }
}

TEST_CASE("gwa_bracket examples") {
    // {y,x} for a = h^2+h is -(2h+1)h = -2h^2 - h
    GWAParams params(parse_a_poly("h^2+h"));
    GWAElement y = gwa_reduce(Y(), params), x = gwa_reduce(X(), params);
    PoissonElement expected = PoissonElement::monomial({2, 0, 0}, Scalar::integer(-2)) +
                              PoissonElement::monomial({1, 0, 0}, Scalar::integer(-1));
    CHECK(gwa_bracket(y, x, params).value() == expected);

    // {h, h^-3} = 0
    GWAElement h1 = gwa_reduce(H(), params), hm3 = gwa_reduce(PoissonElement::h(-3), params);
    CHECK(gwa_bracket(h1, hm3, params).is_zero());

    // {x, y^2} for a = h^2+1 reduces to 4h^2 y
    GWAParams p2(parse_a_poly("h^2+1"));
    GWAElement xx = gwa_reduce(X(), p2), yy = gwa_reduce(Y().pow(2), p2);
    CHECK(gwa_bracket(xx, yy, p2).value() ==
          PoissonElement::monomial({2, 0, 1}, Scalar::integer(4)));
}

TEST_CASE("grading") {
    GWAParams params(parse_a_poly("h^2+1"));
    PoissonElement f = PoissonElement::monomial({2, 1, 0}, Scalar::one()) +
                       PoissonElement::monomial({1, 0, 1}, Scalar::one());
    auto parts = grade_decompose(gwa_reduce(f, params));
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1).value() == PoissonElement::monomial({2, 1, 0}, Scalar::one()));
    CHECK(parts.at(-1).value() == PoissonElement::monomial({1, 0, 1}, Scalar::one()));

    auto only = grade_decompose(gwa_reduce(PoissonElement::h(4), params));
    REQUIRE(only.size() == 1);
    CHECK(only.begin()->first == 0);

    CHECK(grade_decompose(gwa_reduce(PoissonElement::zero(), params)).empty());
}

TEST_CASE("eigen_map") {
    GWAParams params(parse_a_poly("h^2+1"));
    GWAElement x = gwa_reduce(X(), params);
    CHECK(eigen_map(x, params) == x);  // eigenvalue 1
    CHECK(eigen_map(gwa_reduce(PoissonElement::h(3), params), params).is_zero());
    // h y^2 -> -2 h y^2
    GWAElement hy2 = gwa_reduce(H() * Y().pow(2), params);
    CHECK(eigen_map(hy2, params) == hy2 * Scalar::integer(-2));
    // linearity
    std::mt19937_64 rng(10);
    for (int i = 0; i < 10; ++i) {
        GWAElement f = gwa_reduce(random_element(rng), params);
        GWAElement g = gwa_reduce(random_element(rng), params);
        CHECK(eigen_map(f + g, params) == eigen_map(f, params) + eigen_map(g, params));
    }
}

TEST_CASE("gwa_bracket agrees with the reduced engine path") {
    // Two-path equality in the quotient: biderivation + reduce versus
    // engine bracket + reduce.
    std::mt19937_64 rng(12);
    for (const char* s : {"h^2+1", "h^2+h", "(h-1)^2"}) {
        GWAParams params(parse_a_poly(s));
        const PoissonElement gens[] = {H(), X(), Y()};
        for (const auto& u : gens)
            for (const auto& v : gens)
                CHECK(gwa_bracket(gwa_reduce(u, params), gwa_reduce(v, params), params) ==
                      gwa_reduce(sc_bracket(lift(u), lift(v), params), params));
        for (int i = 0; i < 50; ++i) {
            PoissonElement u = random_element(rng, 1);
            PoissonElement v = random_element(rng, 1);
            CHECK(gwa_bracket(gwa_reduce(u, params), gwa_reduce(v, params), params) ==
                  gwa_reduce(sc_bracket(lift(u), lift(v), params), params));
        }
    }
}

TEST_CASE("poisson centrality of xy - a(h)") {
    GWAParams params(parse_a_poly("h^2+h"));
    BracketSpec spec = BracketSpec::for_gwa(params);
    PoissonElement central = X() * Y() - PoissonElement::from_laurent(params.a());
    CHECK(is_poisson_central(central, spec));
    CHECK(is_poisson_central(PoissonElement::constant(Scalar::integer(7)), spec));
    CHECK(!is_poisson_central(X(), spec));
}
