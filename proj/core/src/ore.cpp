#include "gwa/ore.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace gwa {

namespace detail {
struct DeltaCache {
    std::mutex mutex;
    std::map<std::int64_t, OreElement> delta_pow;  // i -> delta(x^i)
};
}  // namespace detail

namespace {

// x * E: x moves past t^a h^b picking up t^b, then joins the x-block.
OreElement leftmul_x(const OreElement& e) {
    OreElement out;
    for (const auto& [k, c] : e.terms()) {
        OreKey nk{checked_add(k.t_exp, k.h_exp), k.h_exp, checked_add(k.x_deg, 1), k.y_deg};
        out.add_term(nk, c);
    }
    return out;
}

// t^a h^b * E: plain exponent shift, already normal.
OreElement leftmul_th(std::int64_t t_exp, std::int64_t h_exp, const OreElement& e) {
    OreElement out;
    for (const auto& [k, c] : e.terms()) {
        OreKey nk{checked_add(k.t_exp, t_exp), checked_add(k.h_exp, h_exp), k.x_deg, k.y_deg};
        out.add_term(nk, c);
    }
    return out;
}

// y * E via y (t^a h^b) = t^(a-b) h^b y and y x^i = x^i y + delta(x^i).
OreElement leftmul_y(const OreElement& e, const GWAParams& params) {
    OreElement out;
    for (const auto& [k, c] : e.terms()) {
        std::int64_t t_shift = checked_add(k.t_exp, checked_neg(k.h_exp));
        out.add_term({t_shift, k.h_exp, k.x_deg, checked_add(k.y_deg, 1)}, c);
        if (k.x_deg > 0) {
            OreElement d = params.delta_power(k.x_deg);
            for (const auto& [dk, dc] : d.terms()) {
                OreKey nk{checked_add(t_shift, dk.t_exp), checked_add(k.h_exp, dk.h_exp),
                          dk.x_deg, checked_add(dk.y_deg, k.y_deg)};
                out.add_term(nk, c * dc);
            }
        }
    }
    return out;
}

}  // namespace

GWAParams::GWAParams(LaurentPoly a, std::int64_t conductor)
    : a_(std::move(a)),
      a_prime_(LaurentPoly::h_vars()),
      a_th_(LaurentPoly::th_vars()),
      delta_x_(LaurentPoly::th_vars()),
      conductor_(conductor < 1 ? 1 : conductor),
      cache_(std::make_shared<detail::DeltaCache>()) {
    if (a_.vars() != LaurentPoly::h_vars())
        throw InvalidArgumentError("a(h) must be a polynomial over (h)");
    if (a_.is_zero()) throw InvalidArgumentError("a(h) must be nonzero");
    if (a_.term_count() < 2)
        throw InvalidArgumentError(
            "a(h) must have at least two terms (invertible a(h) is excluded)");
    support_ = support_data(a_);
    a_prime_ = formal_derivative(a_, "h");
    LaurentPoly a_th = a_.embedded(LaurentPoly::th_vars());
    a_th_ = substitute_h(a_th, LaurentPoly::variable(LaurentPoly::th_vars(), "t"), 1);
    delta_x_ = a_th - a_th_;
    for (const auto& [e, c] : a_.terms())
        conductor_ = std::lcm(conductor_, c.conductor());
}

OreElement GWAParams::delta_power(std::int64_t i) const {
    if (i <= 0) return OreElement::zero();
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->delta_pow.find(i);
    if (it != cache_->delta_pow.end()) return it->second;
    // delta(x^i) = delta(x) x^(i-1) + x delta(x^(i-1)); delta(x) lives in
    // the coefficient ring, so the first summand is a plain degree bump.
    OreElement delta_x_elem = OreElement::from_laurent(delta_x_);
    std::int64_t lo = 1;
    if (!cache_->delta_pow.empty()) lo = cache_->delta_pow.rbegin()->first + 1;
    if (cache_->delta_pow.empty()) cache_->delta_pow.emplace(1, delta_x_elem);
    for (std::int64_t j = std::max<std::int64_t>(lo, 2); j <= i; ++j) {
        OreElement term1;
        for (const auto& [k, c] : delta_x_elem.terms())
            term1.add_term({k.t_exp, k.h_exp, j - 1, 0}, c);
        cache_->delta_pow.emplace(j, term1 + leftmul_x(cache_->delta_pow.at(j - 1)));
    }
    return cache_->delta_pow.at(i);
}

OreElement OreElement::monomial(const OreKey& key, const Scalar& c) {
    OreElement e;
    e.add_term(key, c);
    return e;
}

OreElement OreElement::from_laurent(const LaurentPoly& p) {
    OreElement out;
    if (p.vars() == LaurentPoly::h_vars()) {
        for (const auto& [e, c] : p.terms()) out.add_term({0, e[0], 0, 0}, c);
    } else if (p.vars() == LaurentPoly::th_vars()) {
        for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], 0, 0}, c);
    } else {
        throw VariableMismatchError("expected a polynomial over (h) or (t,h)");
    }
    return out;
}

Scalar OreElement::coeff(const OreKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

void OreElement::add_term(const OreKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    if (key.x_deg < 0 || key.y_deg < 0)
        throw InvalidArgumentError("x and y degrees must be non-negative");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OreElement OreElement::operator-() const {
    OreElement out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

OreElement OreElement::operator+(const OreElement& rhs) const {
    OreElement out = *this;
    for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
    return out;
}

OreElement OreElement::operator-(const OreElement& rhs) const { return *this + (-rhs); }

OreElement OreElement::operator*(const Scalar& c) const {
    OreElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, tc] : terms_) out.add_term(k, tc * c);
    return out;
}

OreElement ore_mul(const OreElement& f, const OreElement& g, const GWAParams& params) {
    OreElement out;
    for (const auto& [k, c] : f.terms()) {
        OreElement acc = g;
        for (std::int64_t j = 0; j < k.y_deg; ++j) acc = leftmul_y(acc, params);
        for (std::int64_t i = 0; i < k.x_deg; ++i) acc = leftmul_x(acc);
        acc = leftmul_th(k.t_exp, k.h_exp, acc);
        for (const auto& [ak, ac] : acc.terms()) out.add_term(ak, c * ac);
    }
    return out;
}

OreElement commutator(const OreElement& f, const OreElement& g, const GWAParams& params) {
    return ore_mul(f, g, params) - ore_mul(g, f, params);
}

OreElement ore_pow(const OreElement& f, std::int64_t e, const GWAParams& params) {
    if (e < 0) throw InvalidArgumentError("ore_pow requires a non-negative exponent");
    OreElement acc = OreElement::one();
    for (std::int64_t i = 0; i < e; ++i) acc = ore_mul(acc, f, params);
    return acc;
}

CentralityReport is_central(const OreElement& f, const GWAParams& params) {
    const std::pair<const char*, OreElement> generators[] = {
        {"h", OreElement::h(1)},
        {"h^-1", OreElement::h(-1)},
        {"x", OreElement::x()},
        {"y", OreElement::y()},
    };
    for (const auto& [name, g] : generators) {
        OreElement c = commutator(f, g, params);
        if (!c.is_zero()) return {false, name, c};
    }
    return {true, "", OreElement::zero()};
}

OreElement central_element(const GWAParams& params) {
    return ore_mul(OreElement::x(), OreElement::y(), params) -
           OreElement::from_laurent(params.a_th());
}

SpecializationResult specialize(const OreElement& f, const Scalar& lambda,
                                const GWAParams& params) {
    (void)params;
    if (lambda.is_zero()) throw DivisionByZeroError("specialization requires lambda != 0");
    SpecializationResult result;
    result.parameter_warning = lambda.is_one() || lambda.root_of_unity_order().has_value();
    for (const auto& [k, c] : f.terms())
        result.element.add_term({0, k.h_exp, k.x_deg, k.y_deg}, c * lambda.pow(k.t_exp));
    return result;
}

std::string OreElement::str() const {
    std::vector<detail::PrintedTerm> printed;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        printed.push_back(detail::print_term(
            it->second, {{"t", it->first.t_exp},
                         {"h", it->first.h_exp},
                         {"x", it->first.x_deg},
                         {"y", it->first.y_deg}}));
    }
    return detail::join_terms(printed);
}

std::string to_string(const OreElement& f) { return f.str(); }

std::ostream& operator<<(std::ostream& os, const OreElement& f) { return os << f.str(); }

}  // namespace gwa
