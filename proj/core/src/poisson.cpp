#include "gwa/poisson.hpp"

#include <algorithm>
#include <sstream>

namespace gwa {

PoissonElement PoissonElement::monomial(const PoissonKey& key, const Scalar& c) {
    PoissonElement e;
    e.add_term(key, c);
    return e;
}

PoissonElement PoissonElement::from_laurent(const LaurentPoly& p) {
    if (p.vars() != LaurentPoly::h_vars())
        throw VariableMismatchError("expected a polynomial over (h)");
    PoissonElement out;
    for (const auto& [e, c] : p.terms()) out.add_term({e[0], 0, 0}, c);
    return out;
}

void PoissonElement::add_term(const PoissonKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    if (key.x_deg < 0 || key.y_deg < 0)
        throw InvalidArgumentError("x and y degrees must be non-negative");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PoissonElement PoissonElement::operator-() const {
    PoissonElement out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

PoissonElement PoissonElement::operator+(const PoissonElement& rhs) const {
    PoissonElement out = *this;
    for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
    return out;
}

PoissonElement PoissonElement::operator-(const PoissonElement& rhs) const {
    return *this + (-rhs);
}

PoissonElement PoissonElement::operator*(const PoissonElement& rhs) const {
    PoissonElement out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            PoissonKey k{checked_add(ka.h_exp, kb.h_exp), checked_add(ka.x_deg, kb.x_deg),
                         checked_add(ka.y_deg, kb.y_deg)};
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

PoissonElement PoissonElement::operator*(const Scalar& c) const {
    PoissonElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, tc] : terms_) out.add_term(k, tc * c);
    return out;
}

PoissonElement PoissonElement::pow(std::int64_t e) const {
    if (e < 0) {
        if (terms_.size() != 1)
            throw InvalidArgumentError("negative power of a non-unit element");
        const auto& [k, c] = *terms_.begin();
        if (k.x_deg != 0 || k.y_deg != 0)
            throw InvalidArgumentError("x and y are not invertible in this ring");
        return monomial({checked_mul(k.h_exp, e), 0, 0}, c.pow(e));
    }
    PoissonElement acc = one();
    PoissonElement base = *this;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

PoissonElement partial_h(const PoissonElement& f) {
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) {
        if (k.h_exp == 0) continue;
        out.add_term({k.h_exp - 1, k.x_deg, k.y_deg}, c * Scalar::integer(k.h_exp));
    }
    return out;
}

PoissonElement partial_x(const PoissonElement& f) {
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) {
        if (k.x_deg == 0) continue;
        out.add_term({k.h_exp, k.x_deg - 1, k.y_deg}, c * Scalar::integer(k.x_deg));
    }
    return out;
}

PoissonElement partial_y(const PoissonElement& f) {
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) {
        if (k.y_deg == 0) continue;
        out.add_term({k.h_exp, k.x_deg, k.y_deg - 1}, c * Scalar::integer(k.y_deg));
    }
    return out;
}

PoissonElement substitute(const PoissonElement& f, const PoissonElement& h_img,
                          const PoissonElement& x_img, const PoissonElement& y_img) {
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) {
        PoissonElement term = PoissonElement::constant(c);
        term *= h_img.pow(k.h_exp);
        term *= x_img.pow(k.x_deg);
        term *= y_img.pow(k.y_deg);
        out += term;
    }
    return out;
}

BracketSpec BracketSpec::for_gwa(const GWAParams& params) {
    BracketSpec spec;
    spec.xh = PoissonElement::h() * PoissonElement::x();
    spec.yh = -(PoissonElement::h() * PoissonElement::y());
    spec.yx = -(PoissonElement::from_laurent(params.a_prime()) * PoissonElement::h());
    return spec;
}

PoissonElement bracket(const PoissonElement& f, const PoissonElement& g,
                       const BracketSpec& spec) {
    // Ordered generator pairs with their bracket values; the mirror pairs
    // carry the opposite sign.
    struct Pair {
        PoissonElement (*du)(const PoissonElement&);
        PoissonElement (*dv)(const PoissonElement&);
        const PoissonElement* value;
        bool negate;
    };
    const Pair pairs[] = {
        {partial_x, partial_h, &spec.xh, false}, {partial_h, partial_x, &spec.xh, true},
        {partial_y, partial_h, &spec.yh, false}, {partial_h, partial_y, &spec.yh, true},
        {partial_y, partial_x, &spec.yx, false}, {partial_x, partial_y, &spec.yx, true},
    };
    PoissonElement out;
    for (const auto& p : pairs) {
        PoissonElement fu = p.du(f);
        if (fu.is_zero()) continue;
        PoissonElement gv = p.dv(g);
        if (gv.is_zero()) continue;
        PoissonElement contrib = fu * gv * *p.value;
        out += p.negate ? -contrib : contrib;
    }
    return out;
}

JacobiReport jacobi_check(const BracketSpec& spec) {
    PoissonElement h = PoissonElement::h();
    PoissonElement x = PoissonElement::x();
    PoissonElement y = PoissonElement::y();
    PoissonElement j = bracket(h, bracket(x, y, spec), spec) +
                       bracket(x, bracket(y, h, spec), spec) +
                       bracket(y, bracket(h, x, spec), spec);
    return {j.is_zero(), j};
}

PoissonElement apply_derivation(const PoissonElement& f, const DerivationData& d) {
    return partial_h(f) * d.at_h + partial_x(f) * d.at_x + partial_y(f) * d.at_y;
}

PskeReport pske_check(const BracketSpec& spec, const DerivationData& alpha,
                      const DerivationData& delta) {
    PskeReport report;
    PoissonElement h = PoissonElement::h();
    PoissonElement x = PoissonElement::x();
    PoissonElement y = PoissonElement::y();

    auto push = [&report](std::string name, PoissonElement residual) {
        bool ok = residual.is_zero();
        report.items.push_back({std::move(name), ok, std::move(residual)});
    };

    // (i) alpha is a Poisson derivation of the base:
    // alpha({a,b}) = {alpha(a), b} + {a, alpha(b)} on the base pair (h, x).
    PoissonElement lhs = apply_derivation(bracket(h, x, spec), alpha);
    PoissonElement rhs = bracket(alpha.at_h, x, spec) + bracket(h, alpha.at_x, spec);
    push("alpha preserves {h,x}", lhs - rhs);

    // (ii) the compatibility identity on the base pair (h, x):
    // delta({a,b}) - {delta(a),b} - {a,delta(b)} = alpha(a)delta(b) - delta(a)alpha(b).
    PoissonElement hx = bracket(h, x, spec);
    PoissonElement left = apply_derivation(hx, delta) - bracket(delta.at_h, x, spec) -
                          bracket(h, delta.at_x, spec);
    PoissonElement right = alpha.at_h * delta.at_x - delta.at_h * alpha.at_x;
    push("compatibility identity on (h,x)", left - right);

    // (iii) the claimed rows {y,h} and {y,x} are the extension bracket
    // {y, a} = alpha(a) y + delta(a) for the given pair.
    push("{y,h} = alpha(h)y + delta(h)", spec.yh - (alpha.at_h * y + delta.at_h));
    push("{y,x} = alpha(x)y + delta(x)", spec.yx - (alpha.at_x * y + delta.at_x));

    report.ok = std::all_of(report.items.begin(), report.items.end(),
                            [](const PskeCheckItem& i) { return i.ok; });
    return report;
}

GWAElement GWAElement::operator-() const { return GWAElement(-value_); }

GWAElement GWAElement::operator+(const GWAElement& rhs) const {
    return GWAElement(value_ + rhs.value_);
}

GWAElement GWAElement::operator-(const GWAElement& rhs) const {
    return GWAElement(value_ - rhs.value_);
}

GWAElement GWAElement::operator*(const Scalar& c) const { return GWAElement(value_ * c); }

GWAElement gwa_reduce(const PoissonElement& f, const GWAParams& params) {
    PoissonElement a = PoissonElement::from_laurent(params.a());
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) {
        std::int64_t m = std::min(k.x_deg, k.y_deg);
        if (m == 0) {
            out.add_term(k, c);
            continue;
        }
        PoissonElement rest =
            PoissonElement::monomial({k.h_exp, k.x_deg - m, k.y_deg - m}, c);
        out += rest * a.pow(m);
    }
    return GWAElement(std::move(out));
}

GWAElement gwa_mul(const GWAElement& f, const GWAElement& g, const GWAParams& params) {
    return gwa_reduce(f.value() * g.value(), params);
}

GWAElement gwa_bracket(const GWAElement& f, const GWAElement& g, const GWAParams& params) {
    return gwa_reduce(bracket(f.value(), g.value(), BracketSpec::for_gwa(params)), params);
}

std::map<std::int64_t, GWAElement> grade_decompose(const GWAElement& f) {
    std::map<std::int64_t, PoissonElement> parts;
    for (const auto& [k, c] : f.value().terms()) parts[k.x_deg - k.y_deg].add_term(k, c);
    std::map<std::int64_t, GWAElement> out;
    for (auto& [deg, p] : parts) out.emplace(deg, GWAElement(std::move(p)));
    return out;
}

GWAElement eigen_map(const GWAElement& f, const GWAParams& params) {
    GWAElement fh = gwa_bracket(f, gwa_reduce(PoissonElement::h(), params), params);
    return gwa_reduce(fh.value() * PoissonElement::h(-1), params);
}

bool is_poisson_central(const PoissonElement& f, const BracketSpec& spec) {
    return bracket(f, PoissonElement::h(), spec).is_zero() &&
           bracket(f, PoissonElement::x(), spec).is_zero() &&
           bracket(f, PoissonElement::y(), spec).is_zero();
}

std::string PoissonElement::str() const {
    std::vector<detail::PrintedTerm> printed;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        printed.push_back(detail::print_term(
            it->second,
            {{"h", it->first.h_exp}, {"x", it->first.x_deg}, {"y", it->first.y_deg}}));
    }
    return detail::join_terms(printed);
}

std::string to_string(const PoissonElement& f) { return f.str(); }
std::string to_string(const GWAElement& f) { return f.str(); }

std::ostream& operator<<(std::ostream& os, const PoissonElement& f) { return os << f.str(); }
std::ostream& operator<<(std::ostream& os, const GWAElement& f) { return os << f.str(); }

}  // namespace gwa
