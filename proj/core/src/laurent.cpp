#include "gwa/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gwa/support.hpp"

namespace gwa {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars())
        throw VariableMismatchError("operands live over different variable lists");
}

void require_univariate(const LaurentPoly& p, const char* op) {
    if (p.vars().size() != 1)
        throw InvalidArgumentError(std::string(op) + " requires a univariate polynomial");
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Scalar& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents exps, const Scalar& c) {
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw InvalidArgumentError("exponent vector length does not match variable list");
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name,
                                  std::int64_t e) {
    LaurentPoly p(std::move(vars));
    Exponents exps(p.vars_.size(), 0);
    exps[p.var_index(name)] = e;
    p.add_term(exps, Scalar::one());
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Scalar LaurentPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

Scalar LaurentPoly::constant_value() const {
    if (!is_constant()) throw InvalidArgumentError("polynomial is not constant: " + str());
    return terms_.empty() ? Scalar::zero() : terms_.begin()->second;
}

std::size_t LaurentPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw InvalidArgumentError("unknown variable '" + name + "'");
}

void LaurentPoly::add_term(const Exponents& exps, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    require_same_vars(*this, rhs);
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    require_same_vars(*this, rhs);
    LaurentPoly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
    LaurentPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, tc] : terms_) out.add_term(e, tc * c);
    return out;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw InvalidArgumentError("not a unit: " + str());
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = checked_neg(e[i]);
    return monomial(vars_, inv, c.inverse());
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const {
    if (e < 0) return unit_inverse().pow(-e);
    LaurentPoly acc = constant(vars_, Scalar::one());
    LaurentPoly base = *this;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

LaurentPoly LaurentPoly::embedded(std::vector<std::string> target_vars) const {
    LaurentPoly out(std::move(target_vars));
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = out.var_index(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exponents te(out.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) te[where[i]] = e[i];
        out.terms_.emplace(std::move(te), c);
    }
    return out;
}

LaurentPoly LaurentPoly::without_var(const std::string& name) const {
    std::size_t idx = var_index(name);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != idx) vars.push_back(vars_[i]);
    LaurentPoly out(std::move(vars));
    for (const auto& [e, c] : terms_) {
        if (e[idx] != 0)
            throw InvalidArgumentError("variable '" + name + "' still occurs in " + str());
        Exponents te;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) te.push_back(e[i]);
        out.terms_.emplace(std::move(te), c);
    }
    return out;
}

LaurentPoly formal_derivative(const LaurentPoly& p, const std::string& var) {
    std::size_t idx = p.var_index(var);
    LaurentPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] == 0) continue;
        LaurentPoly::Exponents de = e;
        de[idx] -= 1;
        out.add_term(de, c * Scalar::integer(e[idx]));
    }
    return out;
}

LaurentPoly substitute_h(const LaurentPoly& p, const LaurentPoly& gamma, int e) {
    if (gamma.is_zero()) throw DivisionByZeroError("substitution requires gamma != 0");
    if (gamma.vars() != p.vars())
        throw VariableMismatchError("gamma must live in the same ring as p");
    if (!gamma.is_unit()) throw InvalidArgumentError("gamma must be a unit monomial");
    std::size_t idx = p.var_index("h");
    LaurentPoly out(p.vars());
    for (const auto& [exps, c] : p.terms()) {
        std::int64_t n = exps[idx];
        LaurentPoly::Exponents te = exps;
        te[idx] = checked_mul(static_cast<std::int64_t>(e), n);
        out += LaurentPoly::monomial(p.vars(), te, c) * gamma.pow(n);
    }
    return out;
}

LaurentPoly substitute_h(const LaurentPoly& p, const Scalar& gamma, int e) {
    return substitute_h(p, LaurentPoly::constant(p.vars(), gamma), e);
}

LaurentPoly evaluate_var(const LaurentPoly& p, const std::string& var, const Scalar& value) {
    if (value.is_zero()) throw DivisionByZeroError("evaluation point must be nonzero");
    std::size_t idx = p.var_index(var);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        if (i != idx) rest.push_back(p.vars()[i]);
    LaurentPoly out(rest);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exponents te;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != idx) te.push_back(e[i]);
        out.add_term(te, c * value.pow(e[idx]));
    }
    return out;
}

LaurentPoly evaluate_t(const LaurentPoly& p, const Scalar& lambda) {
    return evaluate_var(p, "t", lambda);
}

LaurentPoly divide_by_t_minus_1(const LaurentPoly& p) {
    std::size_t t_idx = p.var_index("t");
    // Group terms by the non-t exponents; each group is a Laurent
    // polynomial in t that (t-1) must divide on its own.
    std::map<LaurentPoly::Exponents, std::map<std::int64_t, Scalar>> groups;
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly::Exponents rest = e;
        rest[t_idx] = 0;
        groups[rest][e[t_idx]] = c;
    }
    LaurentPoly out(p.vars());
    for (const auto& [rest, tpoly] : groups) {
        std::int64_t shift = tpoly.begin()->first;  // clear negative t-powers
        std::int64_t top = tpoly.rbegin()->first;
        std::size_t len = static_cast<std::size_t>(top - shift) + 1;
        std::vector<Scalar> dense(len, Scalar::zero());
        for (const auto& [te, c] : tpoly) dense[static_cast<std::size_t>(te - shift)] = c;
        // Synthetic division by (t - 1): quotient top-down, remainder = value at 1.
        std::vector<Scalar> quot(len > 1 ? len - 1 : 0, Scalar::zero());
        Scalar carry = Scalar::zero();
        for (std::size_t i = len; i-- > 1;) {
            carry += dense[i];
            quot[i - 1] = carry;
        }
        if (!(carry + dense[0]).is_zero())
            throw NotDivisibleError("polynomial does not vanish at t = 1: " + p.str());
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (quot[i].is_zero()) continue;
            LaurentPoly::Exponents e = rest;
            e[t_idx] = checked_add(static_cast<std::int64_t>(i), shift);
            out.add_term(e, quot[i]);
        }
    }
    return out;
}

namespace {

// Dense univariate form with the h-content stripped: p = h^shift * poly(h),
// poly having a nonzero constant term.
struct DenseUni {
    std::int64_t shift = 0;
    std::vector<Scalar> coeffs;  // index = h power; empty means zero

    int degree() const {
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            if (!coeffs[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }
};

DenseUni to_dense(const LaurentPoly& p) {
    DenseUni d;
    if (p.is_zero()) return d;
    std::int64_t lo = p.terms().begin()->first[0];
    std::int64_t hi = p.terms().rbegin()->first[0];
    d.shift = lo;
    d.coeffs.assign(static_cast<std::size_t>(hi - lo) + 1, Scalar::zero());
    for (const auto& [e, c] : p.terms()) d.coeffs[static_cast<std::size_t>(e[0] - lo)] = c;
    return d;
}

LaurentPoly from_dense(const std::vector<Scalar>& coeffs, std::int64_t shift,
                       const std::vector<std::string>& vars) {
    LaurentPoly out(vars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out += LaurentPoly::monomial(vars, {checked_add(static_cast<std::int64_t>(i), shift)},
                                     coeffs[i]);
    }
    return out;
}

// Remainder of a by b over the scalar field (b nonzero), in place.
void mod_inplace(std::vector<Scalar>& a, const std::vector<Scalar>& b, int db) {
    Scalar lead_inv = b[static_cast<std::size_t>(db)].inverse();
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (a[ui].is_zero()) continue;
        Scalar f = a[ui] * lead_inv;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    require_univariate(p, "laurent_gcd");
    require_same_vars(p, q);
    if (p.is_zero() && q.is_zero())
        throw InvalidArgumentError("gcd of two zero polynomials is undefined");
    if (p.is_zero()) return laurent_gcd(q, q);
    if (q.is_zero()) return laurent_gcd(p, p);

    std::vector<Scalar> a = to_dense(p).coeffs;
    std::vector<Scalar> b = to_dense(q).coeffs;
    while (true) {
        int db = -1;
        for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
            if (!b[static_cast<std::size_t>(i)].is_zero()) {
                db = i;
                break;
            }
        if (db < 0) break;
        mod_inplace(a, b, db);
        a.resize(static_cast<std::size_t>(db));
        std::swap(a, b);
    }
    // a now holds the gcd; normalize monic.
    int da = -1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[static_cast<std::size_t>(i)].is_zero()) {
            da = i;
            break;
        }
    Scalar lead_inv = a[static_cast<std::size_t>(da)].inverse();
    std::vector<Scalar> monic(static_cast<std::size_t>(da) + 1, Scalar::zero());
    for (int i = 0; i <= da; ++i) monic[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * lead_inv;
    // Strip any residual content so the result has a nonzero constant term.
    std::size_t low = 0;
    while (monic[low].is_zero()) ++low;
    return from_dense(std::vector<Scalar>(monic.begin() + static_cast<std::ptrdiff_t>(low), monic.end()), 0,
                      p.vars());
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    require_univariate(p, "divide_exact");
    require_same_vars(p, d);
    if (d.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    if (p.is_zero()) return LaurentPoly::zero(p.vars());
    DenseUni dp = to_dense(p);
    DenseUni dd = to_dense(d);
    int deg_d = dd.degree();
    std::vector<Scalar> rem = dp.coeffs;
    int deg_p = dp.degree();
    if (deg_p < deg_d) return std::nullopt;
    std::vector<Scalar> quot(static_cast<std::size_t>(deg_p - deg_d) + 1, Scalar::zero());
    Scalar lead_inv = dd.coeffs[static_cast<std::size_t>(deg_d)].inverse();
    for (int i = deg_p; i >= deg_d; --i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (rem[ui].is_zero()) continue;
        Scalar f = rem[ui] * lead_inv;
        quot[static_cast<std::size_t>(i - deg_d)] = f;
        for (int j = 0; j <= deg_d; ++j)
            rem[static_cast<std::size_t>(i - deg_d + j)] -= f * dd.coeffs[static_cast<std::size_t>(j)];
    }
    for (const Scalar& c : rem)
        if (!c.is_zero()) return std::nullopt;
    return from_dense(quot, dp.shift - dd.shift, p.vars());
}

Scalar evaluate_at(const LaurentPoly& p, const Scalar& point) {
    require_univariate(p, "evaluate_at");
    Scalar acc = Scalar::zero();
    for (const auto& [e, c] : p.terms()) acc += c * point.pow(e[0]);
    return acc;
}

SupportData support_data(const LaurentPoly& a) {
    require_univariate(a, "support_data");
    if (a.is_zero()) throw InvalidArgumentError("support of the zero polynomial is undefined");
    SupportData s;
    for (const auto& [e, c] : a.terms()) {
        s.exponents.push_back(e[0]);
        s.coefficients.push_back(c);
    }
    s.m = static_cast<std::int64_t>(s.exponents.size());
    s.d = s.exponents.back();
    if (s.m >= 2) {
        std::int64_t g = 0;
        for (std::size_t j = 0; j + 1 < s.exponents.size(); ++j)
            g = std::gcd(g, s.d - s.exponents[j]);
        s.k = g;
    }
    return s;
}

namespace detail {

PrintedTerm print_term(const Scalar& coeff,
                       const std::vector<std::pair<std::string, std::int64_t>>& var_factors) {
    Scalar s = coeff.simplified();
    std::vector<std::string> pieces;
    bool negative = false;

    std::size_t nonzero = 0, basis_index = 0;
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        if (s.coeffs()[i] != 0) {
            ++nonzero;
            basis_index = i;
        }
    bool has_vars = false;
    for (const auto& [name, e] : var_factors)
        if (e != 0) has_vars = true;

    if (nonzero <= 1) {
        Rational r = nonzero == 0 ? Rational(0) : s.coeffs()[basis_index];
        negative = r < 0;
        Rational mag = negative ? Rational(-r) : r;
        bool has_zeta = basis_index > 0;
        if (mag != 1 || (!has_zeta && !has_vars)) pieces.push_back(mag.get_str());
        if (has_zeta) {
            std::string z = "z" + std::to_string(s.conductor());
            if (basis_index > 1) z += "^" + std::to_string(basis_index);
            pieces.push_back(z);
        }
    } else {
        pieces.push_back("(" + s.str() + ")");
    }
    for (const auto& [name, e] : var_factors) {
        if (e == 0) continue;
        std::string v = name;
        if (e != 1) v += "^" + std::to_string(e);
        pieces.push_back(v);
    }
    std::string body;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) body += "*";
        body += pieces[i];
    }
    return {negative, body};
}

std::string join_terms(const std::vector<PrintedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

}  // namespace detail

std::string LaurentPoly::str() const {
    std::vector<detail::PrintedTerm> printed;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::vector<std::pair<std::string, std::int64_t>> factors;
        for (std::size_t i = 0; i < vars_.size(); ++i) factors.emplace_back(vars_[i], it->first[i]);
        printed.push_back(detail::print_term(it->second, factors));
    }
    return detail::join_terms(printed);
}

std::string to_string(const LaurentPoly& p) { return p.str(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace gwa
