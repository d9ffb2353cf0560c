#include "ulrich/rank2.hpp"

namespace ulrich {

namespace {

void check_chern_identities(const RuledSurface& s, const Polarization& h,
                            ExtensionData& x) {
    x.c1 = x.sub + x.quot;
    DivisorClass expected_c1 = canonical_class(s) + 3 * h.cls();
    if (!x.c1.same_class(expected_c1))
        throw VerificationError("construct_rank2: c1 != K + 3H");
    x.c2 = intersect(x.sub, x.quot, s) + x.z_length;
    if (x.c2 != special_c2(s, h))
        throw VerificationError("construct_rank2: c2 != special_c2");
}

}  // namespace

Int special_c2(const RuledSurface& s, const Polarization& h) {
    const DivisorClass k = canonical_class(s);
    const DivisorClass hc = h.cls();
    Int lemma_form = exact_halve(intersect(hc, 5 * hc + 3 * k, s)) +
                     2 * s.chi_structure_sheaf();

    const Int a = h.alpha(), b = h.beta(), e = s.invariant(), g = s.genus();
    Int explicit_form = -exact_halve(a * (5 * a - 3) * e) + b * (5 * a - 3) +
                        (3 * a - 2) * (g - 1);
    if (lemma_form != explicit_form)
        throw VerificationError("special_c2: the two closed forms disagree");
    return lemma_form;
}

bool verify_initialized_reduction(const RuledSurface& s, const Polarization& h) {
    DivisorClass c1 = canonical_class(s) + 3 * h.cls();
    Int c2 = special_c2(s, h);
    auto [c1m, c2m] = twist_chern(c1, c2, -h.cls(), s);
    auto [c1mm, c2mm] = twist_chern(c1, c2, -2 * h.cls(), s);
    return rank2_chi(s, c1m, c2m) == 0 && rank2_chi(s, c1mm, c2mm) == 0;
}

ExtensionData ideal_sheaf_recipe(const RuledSurface& s, const Polarization& h) {
    const Int a = h.alpha(), b = h.beta(), e = s.invariant(), g = s.genus();
    TwistLabel l1 = TwistLabel::generator("L1");
    TwistLabel l2 = s.k_twist() - l1;

    ExtensionData x;
    x.sub = {a, b + g - 1, l1};
    x.quot = {2 * a - 2, 2 * b + g - 1 - e, l2};
    x.z_length = exact_halve((a - 1) * (2 * b - e * a));
    x.stability = Stability::Stable;
    x.genericity = {"L1 general in Pic0(C)", "L2 = k - L1",
                    "Z general of length " + std::to_string(x.z_length) +
                        " with distinct points"};
    return x;
}

ExtensionData construct_rank2(const RuledSurface& s, const Polarization& h) {
    const Int a = h.alpha(), b = h.beta(), e = s.invariant(), g = s.genus();
    TwistLabel l1 = TwistLabel::generator("L1");
    TwistLabel l2 = s.k_twist() - l1;

    ExtensionData x;
    if (a == 1) {
        x.sub = {1, b + g - 1, l2};
        x.quot = {0, 2 * b + g - 1 - e, l1};
        x.z_length = 0;
        x.ext_dim = 2 * b - e + 2 * (g - 1);
        x.family_dim = 2 * b - e + 4 * g - 3;
        x.stability = Stability::StrictlySemistable;
        x.genericity = {"L1 general in Pic0(C)", "L2 = k - L1",
                        "extension class nonzero in Ext1"};
        if (*x.ext_dim <= 0)
            throw VerificationError("construct_rank2: ext_dim must be positive");
    } else if (a == 2) {
        x.sub = {2, b + g - 1, l1};
        x.quot = {2, 2 * b + g - 1 - e, l2};
        x.z_length = b - e;
        x.stability = Stability::Stable;
        x.genericity = {"L1 general in Pic0(C)", "L2 = k - L1",
                        "Z general of length " + std::to_string(x.z_length) +
                            " with distinct points"};
    } else {
        Int lhs = 2 * b;
        Int branch1 = (a - 3) * (g - 1) + e * a;
        Int branch2 = (g - 1) + e * a;
        if (lhs <= branch1)
            throw ConditionViolated("(alpha-3)(g-1)+e*alpha",
                                    "2*beta = " + std::to_string(lhs) +
                                        " must exceed (alpha-3)(g-1)+e*alpha = " +
                                        std::to_string(branch1));
        if (lhs <= branch2)
            throw ConditionViolated("(g-1)+e*alpha",
                                    "2*beta = " + std::to_string(lhs) +
                                        " must exceed (g-1)+e*alpha = " +
                                        std::to_string(branch2));
        x = ideal_sheaf_recipe(s, h);
    }
    check_chern_identities(s, h, x);
    return x;
}

CbBudget cayley_bacharach_budget(const RuledSurface& s, const Polarization& h) {
    const Int a = h.alpha(), b = h.beta(), e = s.invariant(), g = s.genus();
    if (a < 3)
        throw std::invalid_argument("cayley_bacharach_budget: requires alpha >= 3");
    ExtensionData x = construct_rank2(s, h);  // also enforces (cond)
    CbBudget r;
    r.h0_budget = exact_halve((a - 3) * (2 * (g - 1 + b) - e * a));
    r.z_length = x.z_length;
    r.ok = r.h0_budget <= r.z_length - 1;
    return r;
}

Int step2_section_count(const RuledSurface& s, const Polarization& h) {
    const Int a = h.alpha(), b = h.beta(), e = s.invariant();
    return -exact_halve(a * (a - 1) * e) + (a - 1) * b;
}

StabilityReport stability_report(const RuledSurface& s, const Polarization& h,
                                 const ExtensionData& x) {
    StabilityReport r;
    r.sub_degree = intersect(h.cls(), x.sub, s);
    r.c1_degree = intersect(h.cls(), x.c1, s);
    r.slope_equal = (2 * r.sub_degree == r.c1_degree);
    r.flag = x.stability;
    if (h.alpha() == 1) {
        if (!r.slope_equal)
            throw VerificationError("stability_report: alpha=1 slopes must coincide");
        r.justification = "sub line bundle attains the slope of E";
    } else {
        r.justification =
            "strict semistability would yield Ulrich line bundles, which do not "
            "exist for alpha >= 2";
    }
    return r;
}

}  // namespace ulrich
