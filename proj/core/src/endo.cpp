#include "gwa/endo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gwa {

namespace {

void require_nonzero(const Scalar& s, const char* what) {
    if (s.is_zero()) throw InvalidArgumentError(std::string(what) + " must be nonzero");
}

// Extended gcd over the integers: g = alpha*a + beta*b with g >= 0.
struct Egcd {
    std::int64_t g, alpha, beta;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    Egcd sub = egcd(b, a % b);
    return {sub.g, sub.beta, sub.alpha - (a / b) * sub.beta};
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class m = abs(n);
    std::vector<mpz_class> low, high;
    for (mpz_class i = 1; i * i <= m; ++i) {
        if (m % i != 0) continue;
        low.push_back(i);
        mpz_class j = m / i;
        if (j != i) high.push_back(j);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

// Shift the lowest exponent to zero so the constant term is nonzero.
LaurentPoly strip_content(const LaurentPoly& p) {
    std::int64_t lo = p.terms().begin()->first[0];
    if (lo == 0) return p;
    return p * LaurentPoly::variable(p.vars(), p.vars()[0], -lo);
}

std::int64_t degree_of(const LaurentPoly& p) { return p.terms().rbegin()->first[0]; }

// The single (exponent, coefficient) of a one-term element; throws otherwise.
struct MonomialView {
    std::int64_t h_exp, x_deg, y_deg;
    Scalar coeff;
};

std::optional<MonomialView> as_monomial(const GWAElement& e) {
    if (e.value().terms().size() != 1) return std::nullopt;
    const auto& [k, c] = *e.value().terms().begin();
    return MonomialView{k.h_exp, k.x_deg, k.y_deg, c};
}

}  // namespace

SimplicityResult simplicity_test(const GWAParams& params) {
    LaurentPoly witness = laurent_gcd(params.a(), params.a_prime());
    bool simple = witness == LaurentPoly::constant(LaurentPoly::h_vars(), Scalar::one());
    return {simple, witness};
}

std::string to_string(EndoKind kind) {
    switch (kind) {
        case EndoKind::positive: return "positive";
        case EndoKind::zero: return "zero";
        case EndoKind::negative: return "negative";
    }
    return "?";
}

Endomorphism Endomorphism::positive(Scalar gamma, Scalar b, std::int64_t n) {
    require_nonzero(gamma, "gamma");
    require_nonzero(b, "b");
    Endomorphism e;
    e.kind = EndoKind::positive;
    e.gamma = std::move(gamma);
    e.b = std::move(b);
    e.n = n;
    return e;
}

Endomorphism Endomorphism::zero_type(Scalar gamma) {
    require_nonzero(gamma, "gamma");
    Endomorphism e;
    e.kind = EndoKind::zero;
    e.gamma = std::move(gamma);
    return e;
}

Endomorphism Endomorphism::negative(Scalar gamma, Scalar b, Scalar c, std::int64_t u,
                                    std::int64_t v) {
    require_nonzero(gamma, "gamma");
    require_nonzero(b, "b");
    require_nonzero(c, "c");
    Endomorphism e;
    e.kind = EndoKind::negative;
    e.gamma = std::move(gamma);
    e.b = std::move(b);
    e.c = std::move(c);
    e.u = u;
    e.v = v;
    return e;
}

std::string Endomorphism::str() const {
    std::ostringstream os;
    os << to_string(kind) << "(gamma=" << gamma.str();
    if (kind == EndoKind::positive) os << ", b=" << b.str() << ", n=" << n;
    if (kind == EndoKind::negative)
        os << ", b=" << b.str() << ", c=" << c.str() << ", u=" << u << ", v=" << v;
    os << ")";
    return os.str();
}

EndoImages images_of(const Endomorphism& psi, const GWAParams& params) {
    PoissonElement h_img, x_img, y_img;
    switch (psi.kind) {
        case EndoKind::positive:
            h_img = PoissonElement::monomial({1, 0, 0}, psi.gamma);
            x_img = PoissonElement::monomial({psi.n, 1, 0}, psi.b);
            y_img = PoissonElement::monomial(
                {-psi.n, 0, 1}, psi.gamma.pow(params.support().d) * psi.b.inverse());
            break;
        case EndoKind::zero:
            h_img = PoissonElement::constant(psi.gamma);
            break;
        case EndoKind::negative:
            h_img = PoissonElement::monomial({-1, 0, 0}, psi.gamma);
            x_img = PoissonElement::monomial({psi.v, 0, 1}, psi.c);
            y_img = PoissonElement::monomial({psi.u, 1, 0}, psi.b);
            break;
    }
    return {gwa_reduce(h_img, params), gwa_reduce(x_img, params), gwa_reduce(y_img, params)};
}

GWAElement apply_endomorphism(const EndoImages& images, const GWAElement& f,
                              const GWAParams& params) {
    return gwa_reduce(
        substitute(f.value(), images.h_img.value(), images.x_img.value(), images.y_img.value()),
        params);
}

EndoCheckReport check_images(const EndoImages& images, const GWAParams& params) {
    EndoCheckReport report;
    const GWAElement& H = images.h_img;
    const GWAElement& X = images.x_img;
    const GWAElement& Y = images.y_img;

    auto image_of_poly = [&](const LaurentPoly& p) {
        // psi(p(h)) = p(psi(h)).
        return gwa_reduce(substitute(PoissonElement::from_laurent(p), H.value(),
                                     PoissonElement::zero(), PoissonElement::zero()),
                          params);
    };

    auto push = [&report](std::string name, GWAElement residual) {
        bool ok = residual.is_zero();
        report.items.push_back({std::move(name), ok, std::move(residual)});
    };

    push("{x,h} = h*x", gwa_bracket(X, H, params) - gwa_mul(H, X, params));
    push("{y,h} = -h*y", gwa_bracket(Y, H, params) + gwa_mul(H, Y, params));
    LaurentPoly aprime_h = params.a_prime() * LaurentPoly::variable(LaurentPoly::h_vars(), "h");
    push("{y,x} = -a'(h)*h", gwa_bracket(Y, X, params) + image_of_poly(aprime_h));
    push("x*y = a(h)", gwa_mul(X, Y, params) - image_of_poly(params.a()));

    report.ok = std::all_of(report.items.begin(), report.items.end(),
                            [](const EndoCheckItem& i) { return i.ok; });
    return report;
}

EndoCheckReport check_endomorphism(const Endomorphism& psi, const GWAParams& params) {
    return check_images(images_of(psi, params), params);
}

PositiveFamily enumerate_positive(
    const GWAParams& params, const std::vector<std::pair<Scalar, std::int64_t>>& bn_samples) {
    PositiveFamily family;
    family.k = params.support().k.value();
    for (std::int64_t r = 0; r < family.k; ++r)
        family.gammas.push_back(Scalar::root_of_unity(family.k, r).simplified());
    std::sort(family.gammas.begin(), family.gammas.end(),
              [](const Scalar& a, const Scalar& b) { return scalar_compare(a, b) < 0; });
    for (const Scalar& gamma : family.gammas)
        for (const auto& [b, n] : bn_samples)
            family.instances.push_back(Endomorphism::positive(gamma, b, n));
    return family;
}

RootExtraction extract_roots(const LaurentPoly& p, std::int64_t conductor) {
    if (p.is_zero()) throw InvalidArgumentError("cannot extract roots of the zero polynomial");
    RootExtraction out;
    out.residual = LaurentPoly::constant(LaurentPoly::h_vars(), Scalar::one());

    LaurentPoly cur = strip_content(p);
    const std::string var = cur.vars()[0];
    while (degree_of(cur) >= 1) {
        std::int64_t deg = degree_of(cur);
        std::optional<Scalar> root;
        if (deg == 1) {
            Scalar c0 = cur.coeff({0});
            Scalar c1 = cur.coeff({1});
            root = (-c0) * c1.inverse();
        }
        if (!root) {
            // Rational-root candidates, when the polynomial is over Q.
            bool rational = std::all_of(cur.terms().begin(), cur.terms().end(),
                                        [](const auto& t) { return t.second.is_rational(); });
            if (rational) {
                mpz_class den_lcm(1);
                for (const auto& [e, c] : cur.terms())
                    den_lcm = lcm(den_lcm, c.rational_value().get_den());
                mpz_class c0 = mpz_class(cur.coeff({0}).rational_value() * den_lcm);
                mpz_class cd = mpz_class(cur.coeff({deg}).rational_value() * den_lcm);
                for (const mpz_class& num : positive_divisors(c0)) {
                    if (root) break;
                    for (const mpz_class& den : positive_divisors(cd)) {
                        Rational cand(num, den);
                        cand.canonicalize();
                        if (evaluate_at(cur, Scalar::from_rational(cand)).is_zero()) {
                            root = Scalar::from_rational(cand);
                            break;
                        }
                        if (evaluate_at(cur, Scalar::from_rational(-cand)).is_zero()) {
                            root = Scalar::from_rational(-cand);
                            break;
                        }
                    }
                }
            }
        }
        if (!root) {
            // Root-of-unity candidates at the working conductor; the
            // representable ones are exactly the lcm(2,N)-th roots.
            std::int64_t m = std::lcm<std::int64_t>(2, conductor);
            for (std::int64_t j = 0; j < m; ++j) {
                Scalar omega = Scalar::root_of_unity(m, j).simplified();
                if (evaluate_at(cur, omega).is_zero()) {
                    root = omega;
                    break;
                }
            }
        }
        if (!root) break;
        out.roots.push_back(*root);
        LaurentPoly factor = LaurentPoly::variable(cur.vars(), var) -
                             LaurentPoly::constant(cur.vars(), *root);
        auto quotient = divide_exact(cur, factor);
        if (!quotient) throw Error("internal error: found root does not divide");
        cur = strip_content(*quotient);
    }
    // Monic residual; a constant collapses to 1.
    if (degree_of(cur) == 0) {
        out.residual = LaurentPoly::constant(cur.vars(), Scalar::one());
    } else {
        out.residual = cur * cur.coeff({degree_of(cur)}).inverse();
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Scalar& a, const Scalar& b) { return scalar_compare(a, b) < 0; });
    return out;
}

ZeroTypeResult find_zero_type(const GWAParams& params) {
    ZeroTypeResult result;
    result.certificate = laurent_gcd(params.a(), params.a_prime());
    result.residual = LaurentPoly::constant(LaurentPoly::h_vars(), Scalar::one());
    if (result.certificate == LaurentPoly::constant(LaurentPoly::h_vars(), Scalar::one()))
        return result;

    RootExtraction extraction = extract_roots(result.certificate, params.conductor());
    result.residual = extraction.residual;
    for (const Scalar& root : extraction.roots) {
        if (!result.roots.empty() && result.roots.back() == root) continue;  // dedupe
        result.roots.push_back(root);
        result.endomorphisms.push_back(Endomorphism::zero_type(root));
    }
    return result;
}

NegativeSolutionSet solve_negative(const GWAParams& params) {
    NegativeSolutionSet set;
    set.residual_constraint = LaurentPoly::constant(LaurentPoly::h_vars(), Scalar::one());
    const SupportData& sup = params.support();
    std::size_t m = sup.exponents.size();

    // Matching supports of h^s a(h) and a(gamma h^{-1}) forces the
    // support to be symmetric and s = -(i_1 + i_m).
    std::int64_t pair_sum = sup.exponents.front() + sup.exponents.back();
    for (std::size_t j = 0; j < m; ++j) {
        if (sup.exponents[j] + sup.exponents[m - 1 - j] != pair_sum) return set;
    }
    set.s = -pair_sum;
    set.btilde_factor = sup.coefficients.front() * sup.coefficients.back().inverse();
    set.btilde_exponent = sup.exponents.front();

    // Eliminating btilde = bc from the coefficient matches leaves one
    // power constraint per support pair: gamma^(i_j' - i_1) = ratio.
    std::vector<std::pair<std::int64_t, Scalar>> constraints;
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t jp = m - 1 - j;
        std::int64_t g = sup.exponents[jp] - sup.exponents.front();
        Scalar c = (sup.coefficients.front() * sup.coefficients[j]) *
                   (sup.coefficients.back() * sup.coefficients[jp]).inverse();
        if (g == 0) {
            if (!c.is_one()) return set;  // cannot happen for a valid pairing
            continue;
        }
        constraints.emplace_back(g, c);
    }

    std::int64_t big_g = constraints.front().first;
    Scalar big_c = constraints.front().second;
    for (std::size_t i = 1; i < constraints.size(); ++i) {
        Egcd e = egcd(big_g, constraints[i].first);
        big_c = big_c.pow(e.alpha) * constraints[i].second.pow(e.beta);
        big_g = e.g;
    }
    for (const auto& [g, c] : constraints) {
        if (big_c.pow(g / big_g) != c) return set;  // inconsistent system: no solutions
    }
    set.feasible = true;
    set.g = big_g;
    set.c0 = big_c;

    // Solve gamma^g = c0 in the working field.
    LaurentPoly constraint_poly =
        LaurentPoly::variable(LaurentPoly::h_vars(), "h", big_g) -
        LaurentPoly::constant(LaurentPoly::h_vars(), big_c);
    RootExtraction extraction = extract_roots(constraint_poly, params.conductor());
    set.residual_constraint = extraction.residual;

    for (const Scalar& gamma : extraction.roots) {
        Scalar btilde = set.btilde_factor * gamma.pow(set.btilde_exponent);
        // Validate by direct substitution into bc h^s a(h) = a(gamma h^{-1}).
        LaurentPoly lhs = params.a() * LaurentPoly::variable(LaurentPoly::h_vars(), "h", set.s) *
                          btilde;
        LaurentPoly rhs = substitute_h(params.a(), gamma, -1);
        if (lhs != rhs)
            throw Error("internal error: negative-type candidate fails its defining relation");
        Endomorphism sample = Endomorphism::negative(gamma, btilde, Scalar::one(), set.s, 0);
        set.solutions.push_back({gamma, btilde, std::move(sample)});
    }
    return set;
}

namespace {

Endomorphism classify_images(const EndoImages& images, const GWAParams& params) {
    auto h_mono = as_monomial(images.h_img);
    if (!h_mono || h_mono->x_deg != 0 || h_mono->y_deg != 0)
        throw Error("composition image of h is not gamma*h^e");
    std::int64_t e = h_mono->h_exp;
    const Scalar& gamma = h_mono->coeff;

    if (e == 0) {
        if (!images.x_img.is_zero() || !images.y_img.is_zero())
            throw Error("zero-type composition must annihilate x and y");
        return Endomorphism::zero_type(gamma);
    }
    if (e == 1) {
        auto x_mono = as_monomial(images.x_img);
        if (!x_mono || x_mono->x_deg != 1 || x_mono->y_deg != 0)
            throw Error("positive-type composition image of x is not b*h^n*x");
        Endomorphism result = Endomorphism::positive(gamma, x_mono->coeff, x_mono->h_exp);
        if (images_of(result, params).y_img != images.y_img)
            throw Error("positive-type composition image of y has an unexpected shape");
        return result;
    }
    if (e == -1) {
        auto x_mono = as_monomial(images.x_img);
        auto y_mono = as_monomial(images.y_img);
        if (!x_mono || x_mono->x_deg != 0 || x_mono->y_deg != 1 || !y_mono ||
            y_mono->x_deg != 1 || y_mono->y_deg != 0)
            throw Error("negative-type composition images have an unexpected shape");
        return Endomorphism::negative(gamma, y_mono->coeff, x_mono->coeff, y_mono->h_exp,
                                      x_mono->h_exp);
    }
    throw Error("composition image of h has exponent outside {-1, 0, 1}");
}

}  // namespace

Endomorphism compose(const Endomorphism& f, const Endomorphism& g, const GWAParams& params) {
    EndoImages fi = images_of(f, params);
    EndoImages gi = images_of(g, params);
    EndoImages composed{apply_endomorphism(fi, gi.h_img, params),
                        apply_endomorphism(fi, gi.x_img, params),
                        apply_endomorphism(fi, gi.y_img, params)};
    return classify_images(composed, params);
}

Endomorphism invert(const Endomorphism& psi, const GWAParams& params) {
    Endomorphism inv;
    switch (psi.kind) {
        case EndoKind::positive:
            inv = Endomorphism::positive(psi.gamma.inverse(), psi.gamma.pow(psi.n) * psi.b.inverse(),
                                         -psi.n);
            break;
        case EndoKind::negative:
            inv = Endomorphism::negative(psi.gamma, psi.c.inverse() * psi.gamma.pow(-psi.v),
                                         psi.b.inverse() * psi.gamma.pow(-psi.u), psi.v, psi.u);
            break;
        case EndoKind::zero:
            throw InvalidArgumentError("zero-type endomorphisms are not injective");
    }
    if (!is_identity(compose(psi, inv, params), params) ||
        !is_identity(compose(inv, psi, params), params))
        throw Error("internal error: inverse does not compose to the identity");
    return inv;
}

bool is_identity(const Endomorphism& psi, const GWAParams& params) {
    EndoImages img = images_of(psi, params);
    return img.h_img == gwa_reduce(PoissonElement::h(), params) &&
           img.x_img == gwa_reduce(PoissonElement::x(), params) &&
           img.y_img == gwa_reduce(PoissonElement::y(), params);
}

bool same_endomorphism(const Endomorphism& a, const Endomorphism& b, const GWAParams& params) {
    EndoImages ia = images_of(a, params);
    EndoImages ib = images_of(b, params);
    return ia.h_img == ib.h_img && ia.x_img == ib.x_img && ia.y_img == ib.y_img;
}

}  // namespace gwa
