#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "gwa/ore.hpp"
#include "gwa/parse.hpp"

using namespace gwa;

namespace {

GWAParams params_h2p1() { return GWAParams(parse_a_poly("h^2+1")); }

OreElement random_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> e(-2, 2);
    std::uniform_int_distribution<std::int64_t> d(0, 2);
    std::uniform_int_distribution<int> c(-3, 3);
    int coeff = c(rng);
    if (coeff == 0) coeff = 1;
    return OreElement::monomial({e(rng), e(rng), d(rng), d(rng)}, Scalar::integer(coeff));
}

OreElement random_element(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> n(1, max_terms);
    OreElement out;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) out += random_monomial(rng);
    return out;
}

}  // namespace

TEST_CASE("GWAParams rejects invertible a(h)") {
    CHECK_THROWS_AS(GWAParams(parse_a_poly("h^3")), InvalidArgumentError);
    CHECK_THROWS_AS(GWAParams(parse_a_poly("0")), InvalidArgumentError);
    CHECK_NOTHROW(GWAParams(parse_a_poly("h^2+1")));
}

TEST_CASE("GWAParams working conductor covers the coefficients") {
    CHECK(GWAParams(parse_a_poly("h^2+1")).conductor() == 1);
    CHECK(GWAParams(parse_a_poly("z4 h^2 + 1")).conductor() == 4);
    CHECK(GWAParams(parse_a_poly("z4 h^2 + 1"), 3).conductor() == 12);
    CHECK(GWAParams(parse_a_poly("h^2+1"), 6).conductor() == 6);
}

TEST_CASE("rewriting rules on generators") {
    GWAParams params = params_h2p1();
    OreElement x = OreElement::x(), y = OreElement::y(), h = OreElement::h();

    // x h = t h x
    CHECK(ore_mul(x, h, params) == OreElement::monomial({1, 1, 1, 0}, Scalar::one()));
    // y h = t^-1 h y
    CHECK(ore_mul(y, h, params) == OreElement::monomial({-1, 1, 0, 1}, Scalar::one()));
    // y x = x y + a(h) - a(th)
    OreElement expected = ore_mul(x, y, params) + OreElement::from_laurent(params.a()) -
                          OreElement::from_laurent(params.a_th());
    CHECK(ore_mul(y, x, params) == expected);
    // h h^-1 = 1
    CHECK(ore_mul(h, OreElement::h(-1), params) == OreElement::one());
}

TEST_CASE("commutators") {
    GWAParams params = params_h2p1();
    OreElement x = OreElement::x(), y = OreElement::y(), h = OreElement::h();
    // [x, h] = (t-1) h x
    OreElement thx = OreElement::monomial({1, 1, 1, 0}, Scalar::one());
    OreElement hx = OreElement::monomial({0, 1, 1, 0}, Scalar::one());
    CHECK(commutator(x, h, params) == thx - hx);
    // [h, h^2] = 0
    CHECK(commutator(h, ore_mul(h, h, params), params).is_zero());
    // [y, x] = a(h) - a(th)
    CHECK(commutator(y, x, params) ==
          OreElement::from_laurent(params.a()) - OreElement::from_laurent(params.a_th()));
}

TEST_CASE("associativity of the rewriting engine") {
    std::mt19937_64 rng(424242);
    for (const char* a_str : {"h^2+1", "h^2+h", "h^-1+h", "h^3+h+1"}) {
        GWAParams params(parse_a_poly(a_str));
        for (int i = 0; i < 12; ++i) {
            OreElement f = random_element(rng);
            OreElement g = random_element(rng);
            OreElement k = random_element(rng);
            CHECK(ore_mul(ore_mul(f, g, params), k, params) ==
                  ore_mul(f, ore_mul(g, k, params), params));
        }
    }
}

TEST_CASE("distributivity and unit laws") {
    std::mt19937_64 rng(7);
    GWAParams params = params_h2p1();
    OreElement one = OreElement::one();
    for (int i = 0; i < 20; ++i) {
        OreElement f = random_element(rng);
        OreElement g = random_element(rng);
        OreElement k = random_element(rng);
        CHECK(ore_mul(f, g + k, params) == ore_mul(f, g, params) + ore_mul(f, k, params));
        CHECK(ore_mul(f + g, k, params) == ore_mul(f, k, params) + ore_mul(g, k, params));
        CHECK(ore_mul(one, f, params) == f);
        CHECK(ore_mul(f, one, params) == f);
    }
}

TEST_CASE("y x^i has the expected normal-form shape") {
    GWAParams params = params_h2p1();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> ipick(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::int64_t i = ipick(rng);
        OreElement xi = ore_pow(OreElement::x(), i, params);
        OreElement lhs = commutator(OreElement::y(), xi, params);
        for (const auto& [k, c] : lhs.terms()) {
            CHECK(k.x_deg <= i - 1);  // delta lowers x-degree
            CHECK(k.y_deg == 0);
        }
    }
}

TEST_CASE("centrality of xy - a(th)") {
    for (const char* a_str : {"h^2+1", "h^2+h", "(h-1)^2", "h^-1+h"}) {
        GWAParams params(parse_a_poly(a_str));
        CHECK(is_central(central_element(params), params).central);
    }
    GWAParams params = params_h2p1();
    CHECK(is_central(OreElement::one(), params).central);
    CentralityReport r = is_central(OreElement::x(), params);
    CHECK(!r.central);
    CHECK(r.witness_generator == "h");
    // witness [x,h] = (t-1)hx
    CHECK(r.witness == OreElement::monomial({1, 1, 1, 0}, Scalar::one()) -
                           OreElement::monomial({0, 1, 1, 0}, Scalar::one()));
}

TEST_CASE("specialization") {
    GWAParams params = params_h2p1();
    OreElement x = OreElement::x(), h = OreElement::h();
    // x h at t = 2 becomes 2 h x, matching xh = qhx at q = 2
    SpecializationResult r = specialize(ore_mul(x, h, params), Scalar::integer(2), params);
    CHECK(r.element == OreElement::monomial({0, 1, 1, 0}, Scalar::integer(2)));
    CHECK(!r.parameter_warning);
    // t-free elements are fixed
    CHECK(specialize(h, Scalar::integer(5), params).element == h);
    // [y,x] specializes to a(h) - a(2h)
    OreElement c = commutator(OreElement::y(), x, params);
    OreElement expected = OreElement::from_laurent(params.a()) -
                          OreElement::from_laurent(substitute_h(params.a(), Scalar::integer(2), 1));
    CHECK(specialize(c, Scalar::integer(2), params).element == expected);
    // warnings at lambda = 1 and at roots of unity
    CHECK(specialize(h, Scalar::one(), params).parameter_warning);
    CHECK(specialize(h, Scalar::root_of_unity(4), params).parameter_warning);
    CHECK_THROWS_AS(specialize(h, Scalar::zero(), params), DivisionByZeroError);
}

TEST_CASE("specialize commutes with multiplication") {
    std::mt19937_64 rng(11);
    GWAParams params(parse_a_poly("h^2+h"));
    Scalar lambda = Scalar::integer(3);
    for (int i = 0; i < 15; ++i) {
        OreElement f = random_element(rng);
        OreElement g = random_element(rng);
        OreElement lhs = specialize(ore_mul(f, g, params), lambda, params).element;
        // The specialized product obeys the lambda relations: recompute by
        // specializing first and multiplying with t shadowing lambda.
        OreElement fs = specialize(f, lambda, params).element;
        OreElement gs = specialize(g, lambda, params).element;
        OreElement rhs = specialize(ore_mul(fs, gs, params), lambda, params).element;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("concurrent products with shared params agree") {
    GWAParams params = params_h2p1();
    OreElement f = ore_pow(OreElement::y(), 3, params);
    OreElement g = ore_pow(OreElement::x(), 4, params);
    OreElement expected = ore_mul(f, g, params);

    GWAParams shared(parse_a_poly("h^2+1"));
    std::vector<OreElement> results(4);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i)
        threads.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = ore_mul(f, g, shared); });
    for (auto& th : threads) th.join();
    for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("display of normal forms") {
    GWAParams params = params_h2p1();
    OreElement yx = ore_mul(OreElement::y(), OreElement::x(), params);
    CHECK(yx.str() == "x*y - t^2*h^2 + h^2");
}
