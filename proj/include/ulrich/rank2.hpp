#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

enum class Stability { StrictlySemistable, Stable };

inline const char* to_string(Stability s) {
    return s == Stability::Stable ? "stable" : "strictly_semistable";
}

/// Complete numerical description of a constructed rank-2 special Ulrich
/// bundle: an extension of the quotient (an ideal-sheaf twist when
/// z_length > 0) by the sub line bundle.
struct ExtensionData {
    DivisorClass sub;
    DivisorClass quot;
    Int z_length = 0;
    DivisorClass c1;
    Int c2 = 0;
    std::optional<Int> ext_dim;     // dim Ext^1, alpha = 1 only
    std::optional<Int> family_dim;  // moduli count, alpha = 1 only
    Stability stability = Stability::Stable;
    std::vector<std::string> genericity;
};

struct CbBudget {
    Int h0_budget = 0;
    Int z_length = 0;
    bool ok = false;
};

struct StabilityReport {
    Int sub_degree = 0;     // H.sub
    Int c1_degree = 0;      // H.c1; slope of E is half of this
    bool slope_equal = false;
    Stability flag = Stability::Stable;
    std::string justification;
};

/// c2 of a special Ulrich bundle: H.(5H+3K)/2 + 2 chi(O_X), exact; agrees
/// with the explicit polynomial -a(5a-3)e/2 + b(5a-3) + (3a-2)(g-1).
Int special_c2(const RuledSurface& s, const Polarization& h);

/// chi(E(-H)) = chi(E(-2H)) = 0 for (c1, c2) = (K+3H, special_c2).
bool verify_initialized_reduction(const RuledSurface& s, const Polarization& h);

/// The ideal-sheaf extension recipe for alpha >= 2:
/// sub = alpha*C0 + (b+g-1)F, quot = (2alpha-2)C0 + (2b+g-1-e)F,
/// l(Z) = (alpha-1)(2b - e*alpha)/2. Hypotheses are not checked here;
/// construct_rank2 is the validated entry point.
ExtensionData ideal_sheaf_recipe(const RuledSurface& s, const Polarization& h);

/// Numerical data of a rank-2 special Ulrich bundle for any valid
/// polarization. For alpha >= 3 requires
/// 2*beta > max{(alpha-3)(g-1) + e*alpha, (g-1) + e*alpha}.
ExtensionData construct_rank2(const RuledSurface& s, const Polarization& h);

/// Section budget of the Cayley-Bacharach linear system for alpha >= 3:
/// (alpha-3)(g-1+beta-e*alpha/2), required to be <= l(Z) - 1.
CbBudget cayley_bacharach_budget(const RuledSurface& s, const Polarization& h);

/// -alpha(alpha-1)e/2 + (alpha-1)beta; equals l(Z) for alpha >= 2.
Int step2_section_count(const RuledSurface& s, const Polarization& h);

/// Slopes of the sub bundle and of E; for alpha = 1 the equality
/// H.sub = H.c1/2 witnesses strict semistability.
StabilityReport stability_report(const RuledSurface& s, const Polarization& h,
                                 const ExtensionData& x);

}  // namespace ulrich
