#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwa/laurent.hpp"
#include "gwa/support.hpp"

using namespace gwa;

namespace {

const std::vector<std::string> HV = LaurentPoly::h_vars();
const std::vector<std::string> THV = LaurentPoly::th_vars();

LaurentPoly h_poly() { return LaurentPoly::variable(HV, "h"); }
LaurentPoly c_h(std::int64_t n) { return LaurentPoly::constant(HV, Scalar::integer(n)); }

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                        int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    std::uniform_int_distribution<int> c(-4, 4);
    LaurentPoly p = LaurentPoly::zero(vars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        LaurentPoly::Exponents exps;
        for (std::size_t v = 0; v < vars.size(); ++v) exps.push_back(e(rng));
        p += LaurentPoly::monomial(vars, exps, Scalar::integer(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    LaurentPoly h = h_poly();
    // (h+1)(h-1) = h^2 - 1
    CHECK((h + c_h(1)) * (h - c_h(1)) == h.pow(2) - c_h(1));
    // Laurent units: h^-1 * h = 1
    CHECK(LaurentPoly::variable(HV, "h", -1) * h == c_h(1));
    // (t-1)(t+1) = t^2 - 1
    LaurentPoly t = LaurentPoly::variable(THV, "t");
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    CHECK((t - one) * (t + one) == t.pow(2) - one);
}

TEST_CASE("mismatched variable lists are rejected") {
    CHECK_THROWS_AS(h_poly() + LaurentPoly::variable(THV, "h"), VariableMismatchError);
}

TEST_CASE("formal derivative") {
    LaurentPoly h = h_poly();
    CHECK(formal_derivative(h.pow(2) + c_h(1), "h") == c_h(2) * h);
    // power rule on a negative exponent: d/dh h^-1 = -h^-2
    CHECK(formal_derivative(LaurentPoly::variable(HV, "h", -1), "h") ==
          LaurentPoly::monomial(HV, {-2}, Scalar::integer(-1)));
    CHECK(formal_derivative(c_h(5), "h").is_zero());
    CHECK_THROWS_AS(formal_derivative(h, "w"), InvalidArgumentError);
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p = random_poly(rng, HV);
        LaurentPoly q = random_poly(rng, HV);
        CHECK(formal_derivative(p + q, "h") ==
              formal_derivative(p, "h") + formal_derivative(q, "h"));
        CHECK(formal_derivative(p * q, "h") ==
              formal_derivative(p, "h") * q + p * formal_derivative(q, "h"));
    }
}

TEST_CASE("substitute_h") {
    LaurentPoly h = LaurentPoly::variable(THV, "h");
    LaurentPoly t = LaurentPoly::variable(THV, "t");
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    // a = h^2+1 with symbolic gamma = t gives a(th) = t^2 h^2 + 1
    CHECK(substitute_h(h.pow(2) + one, t, 1) == t.pow(2) * h.pow(2) + one);
    // direct substitution h -> h^-1
    CHECK(substitute_h(h.pow(2) + one, Scalar::one(), -1) ==
          LaurentPoly::monomial(THV, {0, -2}, Scalar::one()) + one);
    // identity substitution
    CHECK(substitute_h(h, Scalar::one(), 1) == h);
    CHECK_THROWS_AS(substitute_h(h, Scalar::zero(), 1), DivisionByZeroError);
}

TEST_CASE("composing h -> gamma h^-1 twice is the identity") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        LaurentPoly p = random_poly(rng, HV);
        Scalar gamma = Scalar::root_of_unity(4).pow(i % 4) * Scalar::integer(2);
        LaurentPoly once = substitute_h(p, gamma, -1);
        CHECK(substitute_h(once, gamma, -1) == p);
    }
}

TEST_CASE("evaluate_t") {
    LaurentPoly t = LaurentPoly::variable(THV, "t");
    LaurentPoly h = LaurentPoly::variable(THV, "h");
    LaurentPoly t_inv = LaurentPoly::variable(THV, "t", -1);
    // t h + t^-1 at lambda = 2 -> 2h + 1/2
    LaurentPoly p = t * h + t_inv;
    LaurentPoly expected = LaurentPoly::monomial(HV, {1}, Scalar::integer(2)) +
                           LaurentPoly::constant(HV, Scalar::from_rational(Rational(1, 2)));
    CHECK(evaluate_t(p, Scalar::integer(2)) == expected);
    // (t-1)h at 1 -> 0
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    CHECK(evaluate_t((t - one) * h, Scalar::one()).is_zero());
    // t-free input is untouched
    CHECK(evaluate_t(h.pow(2), Scalar::integer(7)) == h_poly().pow(2));
    CHECK_THROWS_AS(evaluate_t(t, Scalar::zero()), DivisionByZeroError);
}

TEST_CASE("divide_by_t_minus_1") {
    LaurentPoly t = LaurentPoly::variable(THV, "t");
    LaurentPoly h = LaurentPoly::variable(THV, "h");
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    CHECK(divide_by_t_minus_1(t.pow(2) - one) == t + one);
    CHECK(divide_by_t_minus_1(t * h - h) == h);
    CHECK_THROWS_AS(divide_by_t_minus_1(t), NotDivisibleError);
    // negative t-powers: t^-1 h - h = (t-1) * (-t^-1 h)
    LaurentPoly p = LaurentPoly::variable(THV, "t", -1) * h - h;
    CHECK(divide_by_t_minus_1(p) == LaurentPoly::monomial(THV, {-1, 1}, Scalar::integer(-1)));
}

TEST_CASE("divide_by_t_minus_1 inverts multiplication by (t-1)") {
    std::mt19937_64 rng(7);
    LaurentPoly t = LaurentPoly::variable(THV, "t");
    LaurentPoly one = LaurentPoly::constant(THV, Scalar::one());
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p = random_poly(rng, THV);
        CHECK(divide_by_t_minus_1((t - one) * p) == p);
    }
}

TEST_CASE("laurent_gcd") {
    LaurentPoly h = h_poly();
    // gcd((h-1)^2, 2(h-1)) = h - 1
    CHECK(laurent_gcd(h.pow(2) - c_h(2) * h + c_h(1), c_h(2) * h - c_h(2)) == h - c_h(1));
    // h-content of h^2+h is stripped: gcd(h+1, 2h+1) = 1
    CHECK(laurent_gcd(h.pow(2) + h, c_h(2) * h + c_h(1)) == c_h(1));
    // pure h-powers are units
    CHECK(laurent_gcd(h, h.pow(3)) == c_h(1));
    CHECK_THROWS_AS(laurent_gcd(LaurentPoly::zero(HV), LaurentPoly::zero(HV)),
                    InvalidArgumentError);
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 30; ++i) {
        LaurentPoly p = random_poly(rng, HV);
        LaurentPoly q = random_poly(rng, HV);
        if (p.is_zero() && q.is_zero()) continue;
        LaurentPoly g = laurent_gcd(p, q);
        for (const LaurentPoly* f : {&p, &q}) {
            if (f->is_zero()) continue;
            auto quotient = divide_exact(*f, g);
            REQUIRE(quotient.has_value());
            CHECK(*quotient * g == *f);
        }
    }
}

TEST_CASE("support_data") {
    LaurentPoly h = h_poly();
    SupportData s = support_data(h.pow(2) + c_h(1));
    CHECK(s.exponents == std::vector<std::int64_t>{0, 2});
    CHECK(s.d == 2);
    CHECK(s.m == 2);
    CHECK(s.k == 2);

    SupportData s2 = support_data(h.pow(3) + h);
    CHECK(s2.exponents == std::vector<std::int64_t>{1, 3});
    CHECK(s2.d == 3);
    CHECK(s2.k == 2);

    SupportData s3 = support_data(h.pow(5) * c_h(7));
    CHECK(s3.exponents == std::vector<std::int64_t>{5});
    CHECK(s3.m == 1);
    CHECK(!s3.k.has_value());

    CHECK_THROWS_AS(support_data(LaurentPoly::zero(HV)), InvalidArgumentError);
}

TEST_CASE("display is deterministic and round-trip friendly") {
    LaurentPoly h = h_poly();
    CHECK((h - c_h(1)).str() == "h - 1");
    CHECK((h.pow(2) * c_h(-2)).str() == "-2*h^2");
    LaurentPoly p = LaurentPoly::monomial(HV, {3}, Scalar::from_rational(Rational(3, 2))) +
                    LaurentPoly::variable(HV, "h", -1);
    CHECK(p.str() == "3/2*h^3 + h^-1");
    CHECK(LaurentPoly::zero(HV).str() == "0");
}

TEST_CASE("exponent overflow is a hard error") {
    LaurentPoly big = LaurentPoly::monomial(HV, {INT64_MAX - 1}, Scalar::one());
    CHECK_THROWS_AS(big * big, OverflowError);
}
