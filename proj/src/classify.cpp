#include "ulrich/classify.hpp"

#include <algorithm>

namespace ulrich {

DivisorClass ulrich_pair(const DivisorClass& d, const Polarization& h,
                         const RuledSurface& s) {
    return canonical_class(s) + 3 * h.cls() - d;
}

bool numeric_ulrich_line(const DivisorClass& d, const Polarization& h,
                         const RuledSurface& s) {
    const DivisorClass hc = h.cls();
    if (euler_char_line(s, d - hc) != 0) return false;
    if (euler_char_line(s, d - 2 * hc) != 0) return false;
    // Consequence of the two vanishings: H.d = H.(K+3H)/2.
    Int lhs = 2 * intersect(hc, d, s);
    Int rhs = intersect(hc, canonical_class(s) + 3 * hc, s);
    if (lhs != rhs)
        throw VerificationError("numeric_ulrich_line: degree identity failed");
    return true;
}

Classification classify_line_bundles(const RuledSurface& s, const Polarization& h) {
    if (h.alpha() >= 2) return {};

    const Int g = s.genus();
    const Int e = s.invariant();
    const Int beta = h.beta();
    TwistLabel l1 = TwistLabel::generator("L1");
    TwistLabel l2 = s.k_twist() - l1;
    // The fibre-multiple class is always listed first.
    DivisorClass first{0, 2 * beta + g - 1 - e, l1};
    DivisorClass second{1, beta + g - 1, l2};
    return {std::make_pair(first, second)};
}

bool reconcile_with_oracle(Int e, const Polarization& h, const SearchBox& box) {
    RuledSurface s(0, e);
    std::vector<DivisorClass> scanned = search_ulrich_lines(e, h, box);

    Classification c = classify_line_bundles(s, h);
    std::vector<DivisorClass> expected;
    if (!c.empty()) {
        expected.push_back(DivisorClass{c.pair->first.a, c.pair->first.b});
        expected.push_back(DivisorClass{c.pair->second.a, c.pair->second.b});
    }
    auto lex = [](const DivisorClass& x, const DivisorClass& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    };
    std::sort(expected.begin(), expected.end(), lex);

    if (scanned.size() != expected.size()) return false;
    for (size_t i = 0; i < scanned.size(); ++i)
        if (!scanned[i].same_class(expected[i])) return false;
    return true;
}

}  // namespace ulrich
