#include "ulrich/oracle.hpp"

#include <algorithm>

namespace ulrich {

namespace {

// pi_* O(aC0 + bF) = sum_{k=0..a} O_{P1}(b - ke) for a >= 0; the relative
// H^1 vanishes there, so H^i(X) comes from the base alone.
CohTable pushforward_table(Int e, Int a, Int b) {
    CohTable t;
    for (Int k = 0; k <= a; ++k) {
        Int m = b - k * e;
        t.h0 += std::max<Int>(0, m + 1);
        t.h1 += std::max<Int>(0, -m - 1);
    }
    return t;
}

}  // namespace

CohTable cohomology(Int e, const DivisorClass& d) {
    if (e < 1) throw InvalidSurface("cohomology: e must be >= 1");
    if (!d.twist.is_zero())
        throw std::invalid_argument("cohomology: twisted class on a Hirzebruch surface");

    if (d.a >= 0) return pushforward_table(e, d.a, d.b);
    if (d.a == -1) return {0, 0, 0};

    // a <= -2: Serre duality h^i(d) = h^{2-i}(K - d), and K - d has
    // C0-coefficient -2 - a >= 0.
    Int ka = -2 - d.a;
    Int kb = -2 - e - d.b;
    CohTable dual = pushforward_table(e, ka, kb);
    return {dual.h2, dual.h1, dual.h0};
}

bool is_ulrich_line(Int e, const Polarization& h, const DivisorClass& d) {
    return cohomology(e, d - h.cls()).all_zero() &&
           cohomology(e, d - 2 * h.cls()).all_zero();
}

std::vector<DivisorClass> search_ulrich_lines(Int e, const Polarization& h,
                                              const SearchBox& box) {
    std::vector<DivisorClass> found;
    if (box.empty()) return found;
    for (Int a = box.a_min; a <= box.a_max; ++a)
        for (Int b = box.b_min; b <= box.b_max; ++b)
            if (is_ulrich_line(e, h, DivisorClass{a, b}))
                found.emplace_back(a, b);
    return found;
}

}  // namespace ulrich
