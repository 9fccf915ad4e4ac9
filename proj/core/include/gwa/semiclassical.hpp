#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwa/ore.hpp"
#include "gwa/poisson.hpp"

namespace gwa {

/// Evaluate t at 1 term-wise, reading the result as an element of the
/// commutative ring C[h^{\pm1}, x, y]. On normal forms this realizes the
/// map that plugs 1 into the deformation parameter.
PoissonElement classical_limit(const OreElement& f);

/// Embed a commutative element as the normal-form representative with
/// t-exponent 0 throughout.
OreElement lift(const PoissonElement& f);

/// The semiclassical bracket: the commutator fg - gf divided exactly by
/// (t-1), then evaluated at t = 1. The quotient algebra is commutative,
/// so the division always succeeds; a failure is surfaced as an engine
/// bug, not a user error.
PoissonElement sc_bracket(const OreElement& f, const OreElement& g, const GWAParams& params);

/// Values of the induced derivations at t = 1:
/// alpha_1(g) = ((alpha(g) - g)/(t-1))|_{t=1} for the first extension step,
/// beta_1, delta_1 likewise for the second. All values are t-free.
struct InducedDerivationData {
    LaurentPoly alpha1_h;  // = h
    LaurentPoly beta1_h;   // = -h
    LaurentPoly beta1_x;   // = 0
    LaurentPoly delta1_h;  // = 0
    LaurentPoly delta1_x;  // = -a'(h)h
};

InducedDerivationData induced_maps(const GWAParams& params);

struct AdConditionItem {
    std::string name;
    bool divisible = false;
    LaurentPoly value;  // the defect polynomial that must lie in (t-1)A
};

struct AdConditionReport {
    bool ok = false;
    std::vector<AdConditionItem> items;
};

/// Divisibility of each generator defect by (t-1):
/// (alpha-id)(h), (beta-id)(h), (beta-id)(x), delta(h), delta(x).
/// Checking generators suffices: the defects are determined by generator
/// values through the automorphism/derivation laws.
AdConditionReport verify_ad_condition(const GWAParams& params);

/// Same check over caller-supplied defect polynomials (used to probe
/// modified extension data).
AdConditionReport verify_ad_items(
    const std::vector<std::pair<std::string, LaurentPoly>>& items);

}  // namespace gwa
