#include "gwa/semiclassical.hpp"

#include <algorithm>

namespace gwa {

namespace {

// Regroup an Ore element as { (x_deg, y_deg) -> coefficient in C[t,h] }.
std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> group_by_xy(const OreElement& f) {
    std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> groups;
    for (const auto& [k, c] : f.terms()) {
        auto key = std::make_pair(k.x_deg, k.y_deg);
        auto it = groups.find(key);
        if (it == groups.end())
            it = groups.emplace(key, LaurentPoly::zero(LaurentPoly::th_vars())).first;
        it->second += LaurentPoly::monomial(LaurentPoly::th_vars(), {k.t_exp, k.h_exp}, c);
    }
    return groups;
}

}  // namespace

PoissonElement classical_limit(const OreElement& f) {
    PoissonElement out;
    for (const auto& [k, c] : f.terms()) out.add_term({k.h_exp, k.x_deg, k.y_deg}, c);
    return out;
}

OreElement lift(const PoissonElement& f) {
    OreElement out;
    for (const auto& [k, c] : f.terms()) out.add_term({0, k.h_exp, k.x_deg, k.y_deg}, c);
    return out;
}

PoissonElement sc_bracket(const OreElement& f, const OreElement& g, const GWAParams& params) {
    OreElement comm = commutator(f, g, params);
    PoissonElement out;
    for (const auto& [xy, coeff] : group_by_xy(comm)) {
        LaurentPoly quotient;
        try {
            quotient = divide_by_t_minus_1(coeff);
        } catch (const NotDivisibleError&) {
            throw Error("engine bug: commutator is not divisible by (t-1)");
        }
        LaurentPoly at_one = evaluate_t(quotient, Scalar::one());
        for (const auto& [e, c] : at_one.terms())
            out.add_term({e[0], xy.first, xy.second}, c);
    }
    return out;
}

InducedDerivationData induced_maps(const GWAParams& params) {
    auto th = LaurentPoly::th_vars();
    LaurentPoly t = LaurentPoly::variable(th, "t");
    LaurentPoly h = LaurentPoly::variable(th, "h");

    auto at_one = [](const LaurentPoly& p) {
        return evaluate_t(divide_by_t_minus_1(p), Scalar::one());
    };

    InducedDerivationData data{
        .alpha1_h = at_one(t * h - h),                                  // alpha(h) - h
        .beta1_h = at_one(LaurentPoly::variable(th, "t", -1) * h - h),  // beta(h) - h
        .beta1_x = at_one(LaurentPoly::zero(th)),                       // beta(x) - x = 0
        .delta1_h = at_one(LaurentPoly::zero(th)),                      // delta(h) = 0
        .delta1_x = at_one(params.delta_x()),                           // a(h) - a(th)
    };
    return data;
}

AdConditionReport verify_ad_items(
    const std::vector<std::pair<std::string, LaurentPoly>>& items) {
    AdConditionReport report;
    for (const auto& [name, poly] : items) {
        bool divisible = true;
        try {
            divide_by_t_minus_1(poly);
        } catch (const NotDivisibleError&) {
            divisible = false;
        }
        report.items.push_back({name, divisible, poly});
    }
    report.ok = std::all_of(report.items.begin(), report.items.end(),
                            [](const AdConditionItem& i) { return i.divisible; });
    return report;
}

AdConditionReport verify_ad_condition(const GWAParams& params) {
    auto th = LaurentPoly::th_vars();
    LaurentPoly t = LaurentPoly::variable(th, "t");
    LaurentPoly t_inv = LaurentPoly::variable(th, "t", -1);
    LaurentPoly h = LaurentPoly::variable(th, "h");
    return verify_ad_items({
        {"(alpha-id)(h)", t * h - h},
        {"(beta-id)(h)", t_inv * h - h},
        {"(beta-id)(x)", LaurentPoly::zero(th)},
        {"delta(h)", LaurentPoly::zero(th)},
        {"delta(x)", params.delta_x()},
    });
}

}  // namespace gwa
