#include "gwa/verify.hpp"

#include <random>
#include <sstream>

#include "gwa/command.hpp"
#include "gwa/endo.hpp"
#include "gwa/parse.hpp"
#include "gwa/semiclassical.hpp"

namespace gwa {

namespace {

struct Checker {
    bool ok = true;
    std::string first_failure;
    int checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
    std::string summary() const {
        if (ok) return std::to_string(checks) + " exact checks";
        return first_failure;
    }
};

const std::vector<std::string>& test_set() {
    static const std::vector<std::string> p = {"h+1",   "h^2+1",   "h^2+h",  "(h-1)^2",
                                               "h^3+h", "h^3+h+1", "h^-1+h", "(h^2+1)^2"};
    return p;
}

Scalar random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    if (kind(rng) == 0) {
        std::uniform_int_distribution<int> j(1, 3);
        return Scalar::root_of_unity(4, j(rng));
    }
    int n = num(rng);
    if (n == 0) n = 1;
    Rational r(n, den(rng));
    r.canonicalize();
    return Scalar::from_rational(r);
}

PoissonElement random_poisson_monomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> h_exp(-3, 3);
    std::uniform_int_distribution<std::int64_t> deg(0, 3);
    return PoissonElement::monomial({h_exp(rng), deg(rng), deg(rng)}, random_coeff(rng));
}

// Random homogeneous element of W_k: an h-Laurent coefficient times x^k or y^(-k).
GWAElement random_homogeneous(std::mt19937_64& rng, std::int64_t k, const GWAParams& params) {
    std::uniform_int_distribution<std::int64_t> h_exp(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 3);
    PoissonElement p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        PoissonKey key{h_exp(rng), k > 0 ? k : 0, k < 0 ? -k : 0};
        p.add_term(key, random_coeff(rng));
    }
    return gwa_reduce(p, params);
}

CriterionResult criterion_closed_form(std::uint64_t seed) {
    Checker ck;
    int a_index = 0;
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        BracketSpec spec = BracketSpec::for_gwa(params);
        const PoissonElement gens[] = {PoissonElement::h(), PoissonElement::x(),
                                       PoissonElement::y()};
        for (const auto& u : gens)
            for (const auto& v : gens)
                ck.expect(sc_bracket(lift(u), lift(v), params) == bracket(u, v, spec),
                          "generator-pair bracket mismatch for a = " + s);
        std::mt19937_64 rng(seed + 101 * static_cast<std::uint64_t>(++a_index));
        for (int i = 0; i < 50; ++i) {
            PoissonElement u = random_poisson_monomial(rng);
            PoissonElement v = random_poisson_monomial(rng);
            ck.expect(sc_bracket(lift(u), lift(v), params) == bracket(u, v, spec),
                      "two-path bracket mismatch for a = " + s + ", u = " + u.str() +
                          ", v = " + v.str());
        }
    }
    return {1, "semiclassical bracket matches the closed form", ck.ok, ck.summary()};
}

CriterionResult criterion_centrality(std::uint64_t) {
    Checker ck;
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        ck.expect(is_central(central_element(params), params).central,
                  "x*y - a(t*h) not central for a = " + s);
        const OreElement non_central[] = {
            OreElement::x(), OreElement::y(),
            OreElement::monomial({0, 1, 1, 0}, Scalar::one())};
        for (const OreElement& f : non_central) {
            CentralityReport r = is_central(f, params);
            ck.expect(!r.central && !r.witness.is_zero(),
                      "expected a nonzero witness for a = " + s);
        }
    }
    return {2, "centrality of x*y - a(t*h) with non-central probes", ck.ok, ck.summary()};
}

CriterionResult criterion_induced_maps(std::uint64_t) {
    Checker ck;
    auto hv = LaurentPoly::h_vars();
    LaurentPoly h = LaurentPoly::variable(hv, "h");
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        InducedDerivationData maps = induced_maps(params);
        ck.expect(maps.alpha1_h == h, "alpha_1(h) != h for a = " + s);
        ck.expect(maps.beta1_h == -h, "beta_1(h) != -h for a = " + s);
        ck.expect(maps.beta1_x.is_zero(), "beta_1(x) != 0 for a = " + s);
        ck.expect(maps.delta1_h.is_zero(), "delta_1(h) != 0 for a = " + s);
        ck.expect(maps.delta1_x == -(params.a_prime() * h), "delta_1(x) != -a'(h)h for a = " + s);
        ck.expect(verify_ad_condition(params).ok, "divisibility conditions fail for a = " + s);

        BracketSpec spec = BracketSpec::for_gwa(params);
        DerivationData beta1{-PoissonElement::h(), PoissonElement::zero(),
                             PoissonElement::zero()};
        DerivationData delta1{PoissonElement::zero(),
                              PoissonElement::from_laurent(maps.delta1_x),
                              PoissonElement::zero()};
        ck.expect(pske_check(spec, beta1, delta1).ok,
                  "extension compatibility fails for a = " + s);
        DerivationData corrupted{PoissonElement::zero(),
                                 -PoissonElement::from_laurent(params.a_prime()),
                                 PoissonElement::zero()};
        ck.expect(!pske_check(spec, beta1, corrupted).ok,
                  "corrupted delta_1 not detected for a = " + s);
    }
    return {3, "induced derivations and extension compatibility", ck.ok, ck.summary()};
}

CriterionResult criterion_jacobi(std::uint64_t) {
    Checker ck;
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        ck.expect(jacobi_check(BracketSpec::for_gwa(params)).ok,
                  "Jacobi fails for a = " + s);
        BracketSpec corrupted = BracketSpec::for_gwa(params);
        corrupted.yx = PoissonElement::x();
        JacobiReport r = jacobi_check(corrupted);
        ck.expect(!r.ok, "corrupted spec passes Jacobi for a = " + s);
        ck.expect(r.residual == PoissonElement::h() * PoissonElement::x(),
                  "corrupted-spec residual is not h*x for a = " + s);
    }
    return {4, "Jacobi identity, with the corrupted-spec counterexample", ck.ok, ck.summary()};
}

CriterionResult criterion_simplicity(std::uint64_t seed) {
    Checker ck;
    for (const std::string& s : {"h+1", "h^2+1", "h^2+h", "h^3+h+1", "h^-1+h"}) {
        SimplicityResult r = simplicity_test(GWAParams(parse_a_poly(s)));
        ck.expect(r.simple, std::string("expected simple for a = ") + s);
    }
    {
        SimplicityResult r = simplicity_test(GWAParams(parse_a_poly("(h-1)^2")));
        ck.expect(!r.simple && r.witness == parse_a_poly("h-1"),
                  "witness for (h-1)^2 is not h-1");
        SimplicityResult r2 = simplicity_test(GWAParams(parse_a_poly("(h^2+1)^2")));
        ck.expect(!r2.simple && r2.witness == parse_a_poly("h^2+1"),
                  "witness for (h^2+1)^2 is not h^2+1");
    }
    // Factored-input oracle: squarefree iff every constructed multiplicity is 1.
    std::mt19937_64 rng(seed + 5);
    const Rational pool[] = {Rational(1),     Rational(-1), Rational(2), Rational(-2),
                             Rational(3),     Rational(1, 2), Rational(-3, 2), Rational(5)};
    auto hv = LaurentPoly::h_vars();
    LaurentPoly h = LaurentPoly::variable(hv, "h");
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nroots(1, 3);
        std::uniform_int_distribution<int> mult(1, 2);
        std::uniform_int_distribution<int> start(0, 7);
        std::uniform_int_distribution<int> shift(-2, 0);
        int n = nroots(rng);
        int first = start(rng);
        LaurentPoly a = LaurentPoly::constant(hv, Scalar::one());
        bool squarefree = true;
        for (int i = 0; i < n; ++i) {
            const Rational& root = pool[(first + i) % 8];  // distinct roots
            int e = mult(rng);
            if (e > 1) squarefree = false;
            a *= (h - LaurentPoly::constant(hv, Scalar::from_rational(root))).pow(e);
        }
        a *= LaurentPoly::variable(hv, "h", shift(rng));  // unit h-content is irrelevant
        SimplicityResult r = simplicity_test(GWAParams(a));
        ck.expect(r.simple == squarefree, "oracle disagreement on " + a.str());
    }
    return {5, "Poisson simplicity iff a(h) is squarefree", ck.ok, ck.summary()};
}

CriterionResult criterion_grading(std::uint64_t seed) {
    Checker ck;
    int a_index = 0;
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        std::mt19937_64 rng(seed + 707 * static_cast<std::uint64_t>(++a_index));
        std::uniform_int_distribution<std::int64_t> kdist(-4, 4);
        for (int i = 0; i < 100; ++i) {
            std::int64_t k = kdist(rng);
            GWAElement w = random_homogeneous(rng, k, params);
            if (w.is_zero()) continue;
            ck.expect(eigen_map(w, params) == w * Scalar::integer(k),
                      "eigen_map(w) != k*w for a = " + s);
            std::int64_t l = kdist(rng);
            GWAElement v = random_homogeneous(rng, l, params);
            for (const auto& [deg, part] : grade_decompose(gwa_mul(w, v, params)))
                ck.expect(deg == k + l, "product left W_{k+l} for a = " + s);
            for (const auto& [deg, part] : grade_decompose(gwa_bracket(w, v, params)))
                ck.expect(deg == k + l, "bracket left W_{k+l} for a = " + s);
        }
    }
    return {6, "grading and the eigenvector map", ck.ok, ck.summary()};
}

CriterionResult criterion_endomorphisms(std::uint64_t seed) {
    Checker ck;
    int a_index = 0;
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        PositiveFamily family = enumerate_positive(
            params, {{Scalar::one(), 0},
                     {Scalar::integer(2), 1},
                     {Scalar::from_rational(Rational(-3, 2)), -2}});
        for (const Endomorphism& psi : family.instances)
            ck.expect(check_endomorphism(psi, params).ok,
                      "positive instance fails for a = " + s + ": " + psi.str());
        // gamma outside the k-th roots of unity must fail.
        ck.expect(!check_endomorphism(
                       Endomorphism::positive(Scalar::integer(2), Scalar::one(), 0), params)
                       .ok,
                  "gamma = 2 accepted for a = " + s);
        if (family.k % 2 == 1)
            ck.expect(!check_endomorphism(
                           Endomorphism::positive(Scalar::integer(-1), Scalar::one(), 0), params)
                           .ok,
                      "gamma = -1 accepted despite odd k for a = " + s);

        // Zero-type classification.
        ZeroTypeResult zero = find_zero_type(params);
        bool is_h1_sq = s == "(h-1)^2";
        bool is_h2p1_sq = s == "(h^2+1)^2";
        if (is_h1_sq) {
            ck.expect(zero.roots.size() == 1 && zero.roots[0] == Scalar::one(),
                      "(h-1)^2 zero-type roots are not {1}");
            ck.expect(zero.residual == parse_a_poly("1"), "(h-1)^2 left a residual");
        } else if (!is_h2p1_sq) {
            ck.expect(zero.roots.empty() && zero.certificate == parse_a_poly("1"),
                      "unexpected zero-type roots for squarefree a = " + s);
        }
        for (const Endomorphism& psi : zero.endomorphisms)
            ck.expect(check_endomorphism(psi, params).ok,
                      "zero-type instance fails for a = " + s);
        if (is_h2p1_sq) {
            // Roots +-zeta_4 exist only once the working field contains them.
            GWAParams p4(parse_a_poly(s), 4);
            ZeroTypeResult z4 = find_zero_type(p4);
            std::vector<Scalar> expected = {-Scalar::root_of_unity(4), Scalar::root_of_unity(4)};
            ck.expect(z4.roots == expected && z4.residual == parse_a_poly("1"),
                      "(h^2+1)^2 at conductor 4 does not split into {+-z4}");
            for (const Endomorphism& psi : z4.endomorphisms)
                ck.expect(check_endomorphism(psi, p4).ok, "zero-type at conductor 4 fails");
            ck.expect(zero.roots.empty() && zero.residual == parse_a_poly("h^2+1"),
                      "(h^2+1)^2 at conductor 1 should report the residual h^2+1");
        }

        // Negative-type solution sets.
        NegativeSolutionSet neg = solve_negative(params);
        if (s == "h^2+1") {
            ck.expect(neg.feasible && neg.s == -2 && neg.solutions.size() == 2,
                      "h^2+1 negative set wrong");
            for (const NegativeSolution& sol : neg.solutions)
                ck.expect(sol.bc.is_one() &&
                              (sol.gamma == Scalar::one() || sol.gamma == Scalar::integer(-1)),
                          "h^2+1 negative solution wrong");
        } else if (s == "h^2+h") {
            ck.expect(neg.feasible && neg.s == -3 && neg.solutions.size() == 1 &&
                          neg.solutions[0].gamma.is_one() && neg.solutions[0].bc.is_one(),
                      "h^2+h negative set wrong");
        } else if (s == "h^3+h+1") {
            ck.expect(!neg.feasible, "h^3+h+1 should be infeasible");
        }
        for (const NegativeSolution& sol : neg.solutions)
            ck.expect(check_endomorphism(sol.sample, params).ok,
                      "negative sample fails for a = " + s);

        // Inverses compose to the identity; negative pairs compose positive.
        std::mt19937_64 rng(seed + 42 + static_cast<std::uint64_t>(++a_index));
        std::uniform_int_distribution<std::size_t> gpick(0, family.gammas.size() - 1);
        std::uniform_int_distribution<int> bpick(1, 5);
        std::uniform_int_distribution<std::int64_t> npick(-3, 3);
        for (int i = 0; i < 20; ++i) {
            Endomorphism psi = Endomorphism::positive(
                family.gammas[gpick(rng)], Scalar::integer(bpick(rng)), npick(rng));
            ck.expect(is_identity(compose(psi, invert(psi, params), params), params),
                      "positive inverse fails for a = " + s);
        }
        for (const NegativeSolution& sol : neg.solutions) {
            ck.expect(is_identity(compose(sol.sample, invert(sol.sample, params), params), params),
                      "negative inverse fails for a = " + s);
            for (const NegativeSolution& other : neg.solutions) {
                Endomorphism prod = compose(sol.sample, other.sample, params);
                ck.expect(prod.kind == EndoKind::positive,
                          "negative o negative is not positive for a = " + s);
                ck.expect(check_endomorphism(prod, params).ok,
                          "negative o negative fails the relations for a = " + s);
            }
        }
    }
    return {7, "endomorphism classification, enumeration and composition", ck.ok, ck.summary()};
}

CriterionResult criterion_specialization(std::uint64_t) {
    Checker ck;
    OreElement x = OreElement::x(), y = OreElement::y(), h = OreElement::h();
    OreElement hx = OreElement::monomial({0, 1, 1, 0}, Scalar::one());
    OreElement hy = OreElement::monomial({0, 1, 0, 1}, Scalar::one());
    for (const std::string& s : test_set()) {
        GWAParams params(parse_a_poly(s));
        for (std::int64_t l : {2, 3}) {
            Scalar lambda = Scalar::integer(l);
            auto spec = [&](const OreElement& f, const OreElement& g) {
                SpecializationResult r = specialize(ore_mul(f, g, params), lambda, params);
                ck.expect(!r.parameter_warning, "unexpected parameter warning");
                return r.element;
            };
            ck.expect(spec(x, h) == hx * lambda, "x*h != lambda*h*x for a = " + s);
            ck.expect(spec(y, h) == hy * lambda.inverse(), "y*h != lambda^-1*h*y for a = " + s);
            OreElement expected = ore_mul(x, y, params) + OreElement::from_laurent(params.a()) -
                                  OreElement::from_laurent(substitute_h(params.a(), lambda, 1));
            ck.expect(spec(y, x) == expected, "y*x relation fails at lambda for a = " + s);
        }
    }
    return {8, "specialization relations at sample parameters", ck.ok, ck.summary()};
}

// Golden outputs for the three documented queries, frozen from the stable
// JSON schema (schema 1, compact dump).
const char* const kGoldenSimple =
    "{\"schema\":1,\"command\":\"simple\",\"input\":{\"a\":\"h^2 - 2*h + 1\",\"conductor\":1},"
    "\"results\":[{\"name\":\"simplicity\",\"status\":\"info\",\"detail\":{\"simple\":false,"
    "\"witness\":\"h - 1\"}}]}\n";
const char* const kGoldenLimit =
    "{\"schema\":1,\"command\":\"limit\",\"input\":{\"a\":\"h^2 + 1\",\"conductor\":1},"
    "\"results\":[{\"name\":\"sc_bracket\",\"status\":\"info\",\"detail\":\"-2*h^2\"}]}\n";
const char* const kGoldenEndos =
    "{\"schema\":1,\"command\":\"endos\",\"input\":{\"a\":\"h^2 + 1\",\"conductor\":1},"
    "\"results\":[{\"name\":\"positive\",\"status\":\"info\",\"detail\":{\"k\":2,"
    "\"gammas\":[\"-1\",\"1\"],\"family\":\"h -> gamma*h, x -> b*h^n*x, y -> "
    "gamma^d*b^-1*h^-n*y with gamma^k = 1, b nonzero, n integer\"}},"
    "{\"name\":\"zero\",\"status\":\"info\",\"detail\":{\"certificate\":\"1\",\"roots\":[],"
    "\"residual\":\"1\"}},{\"name\":\"negative\",\"status\":\"info\",\"detail\":{"
    "\"feasible\":true,\"s\":-2,\"constraint\":\"gamma^2 = 1\",\"solutions\":[{\"gamma\":\"-1\","
    "\"bc\":\"1\"},{\"gamma\":\"1\",\"bc\":\"1\"}],\"residual_constraint\":\"1\"}}]}\n";

LaurentPoly random_th_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    LaurentPoly p = LaurentPoly::zero(LaurentPoly::th_vars());
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p += LaurentPoly::monomial(LaurentPoly::th_vars(), {e(rng), e(rng)}, random_coeff(rng));
    return p;
}

CriterionResult criterion_cli(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed + 9);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_th_poly(rng);
        LaurentPoly reparsed = parse_poly(p.str());
        ck.expect(reparsed == p, "round-trip failed for " + p.str());
    }

    Command simple{.name = "simple", .a_expr = "(h-1)^2", .format = "json"};
    RunResult r1 = run(simple);
    ck.expect(r1.exit_code == 0 && r1.output == kGoldenSimple,
              "golden mismatch for simple: " + r1.output);

    Command limit{.name = "limit", .a_expr = "h^2+1", .pair_expr = "y,x", .format = "json"};
    RunResult r2 = run(limit);
    ck.expect(r2.exit_code == 0 && r2.output == kGoldenLimit,
              "golden mismatch for limit: " + r2.output);

    Command endos{.name = "endos", .a_expr = "h^2+1", .format = "json"};
    RunResult r3 = run(endos);
    ck.expect(r3.exit_code == 0 && r3.output == kGoldenEndos,
              "golden mismatch for endos: " + r3.output);

    // Exit-code contract: pass / fail / usage.
    ck.expect(run(Command{.name = "jacobi", .a_expr = "h^2+1"}).exit_code == 0,
              "pass fixture exit code");
    Command failing{.name = "check-endo", .a_expr = "h^2+1", .kind = "positive",
                    .gamma_expr = "2"};
    ck.expect(run(failing).exit_code == 1, "fail fixture exit code");
    ck.expect(run(Command{.name = "nonsense"}).exit_code == 2, "unknown command exit code");
    ck.expect(run(Command{.name = "simple", .a_expr = "h^+"}).exit_code == 2,
              "syntax-error exit code");
    ck.expect(run(Command{.name = "simple"}).exit_code == 2, "missing --a exit code");
    return {9, "CLI round-trip, golden outputs and exit codes", ck.ok, ck.summary()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed) {
    return {
        criterion_closed_form(seed),    criterion_centrality(seed),
        criterion_induced_maps(seed),   criterion_jacobi(seed),
        criterion_simplicity(seed),     criterion_grading(seed),
        criterion_endomorphisms(seed),  criterion_specialization(seed),
        criterion_cli(seed),
    };
}

}  // namespace gwa
