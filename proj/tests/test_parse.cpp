#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwa/parse.hpp"

using namespace gwa;

namespace {

const std::vector<std::string> THV = LaurentPoly::th_vars();

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> conductor_pick(0, 2);
    const std::int64_t conductors[] = {3, 4, 8};
    Scalar s;
    if (kind(rng) == 0) {
        std::int64_t n = conductors[conductor_pick(rng)];
        std::uniform_int_distribution<std::int64_t> j(1, n - 1);
        s = Scalar::root_of_unity(n, j(rng));
        if (kind(rng) == 1) s *= Scalar::integer(num(rng) == 0 ? 2 : num(rng));
        if (kind(rng) == 2) s += Scalar::from_rational(Rational(num(rng), den(rng)));
    } else {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        s = Scalar::from_rational(r);
    }
    return s;
}

}  // namespace

TEST_CASE("documented examples") {
    LaurentPoly h = LaurentPoly::variable(THV, "h");
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    CHECK(parse_poly("h^2 + 1") == h.pow(2) + one);
    CHECK(parse_poly("h^-1 + 3/2 h^3") ==
          LaurentPoly::variable(THV, "h", -1) +
              LaurentPoly::monomial(THV, {0, 3}, Scalar::from_rational(Rational(3, 2))));
    CHECK(parse_poly("z4 h^2") ==
          LaurentPoly::monomial(THV, {0, 2}, Scalar::root_of_unity(4)));
}

TEST_CASE("grammar features") {
    // implicit multiplication and explicit '*'
    CHECK(parse_poly("3h^2") == parse_poly("3*h^2"));
    CHECK(parse_poly("2 t h") == parse_poly("2*t*h"));
    // parenthesized powers
    CHECK(parse_poly("(h-1)^2") == parse_poly("h^2 - 2h + 1"));
    // negative exponent on units, including parenthesized ones
    CHECK(parse_poly("(2h)^-1") ==
          LaurentPoly::monomial(THV, {0, -1}, Scalar::from_rational(Rational(1, 2))));
    // leading minus
    CHECK(parse_poly("-2*h^2") == LaurentPoly::monomial(THV, {0, 2}, Scalar::integer(-2)));
    // rational base with power
    CHECK(parse_poly("2^3") == LaurentPoly::constant(THV, Scalar::integer(8)));
    // zeta powers
    CHECK(parse_poly("z8^3") == LaurentPoly::constant(THV, Scalar::root_of_unity(8, 3)));
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("h +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(h"), ParseError);
    CHECK_THROWS_AS(parse_poly("h^"), ParseError);
    CHECK_THROWS_AS(parse_poly("w"), ParseError);
    CHECK_THROWS_AS(parse_poly("h 2 +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(h+1)^-1"), ParseError);  // non-unit negative power
    try {
        parse_poly("h + w");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("conductor limit") {
    ParserOptions tight;
    tight.max_conductor = 8;
    CHECK_NOTHROW(parse_poly("z8", tight));
    CHECK_THROWS_AS(parse_poly("z9", tight), ParseError);
    CHECK_THROWS_AS(parse_poly("z0", tight), ParseError);
}

TEST_CASE("a-polynomials must be t-free and scalars constant") {
    CHECK(parse_a_poly("h^2+1").vars() == LaurentPoly::h_vars());
    CHECK_THROWS_AS(parse_a_poly("t h"), ParseError);
    CHECK(parse_scalar("3/2") == Scalar::from_rational(Rational(3, 2)));
    CHECK(parse_scalar("z4^3") == Scalar::root_of_unity(4, 3));
    CHECK(parse_scalar("-(1 + z4)") == -(Scalar::one() + Scalar::root_of_unity(4)));
    CHECK_THROWS_AS(parse_scalar("h"), ParseError);
}

TEST_CASE("round-trip on random polynomials") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<std::int64_t> e(-4, 4);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = LaurentPoly::zero(THV);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j)
            p += LaurentPoly::monomial(THV, {e(rng), e(rng)}, random_scalar(rng));
        CHECK(parse_poly(p.str()) == p);
    }
}
