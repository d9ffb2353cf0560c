#include "ulrich/lattice.hpp"

namespace ulrich {

std::string DivisorClass::to_string() const {
    std::string s = std::to_string(a) + "*C0 + " + std::to_string(b) + "*F";
    if (!twist.is_zero()) s += " [" + twist.to_string() + "]";
    return s;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const RuledSurface& s) {
    return -d1.a * d2.a * s.invariant() + d1.a * d2.b + d2.a * d1.b;
}

DivisorClass canonical_class(const RuledSurface& s) {
    return {-2, 2 * s.genus() - 2 - s.invariant(), s.k_twist()};
}

Int euler_char_line(const RuledSurface& s, const DivisorClass& d) {
    // (a+1)*a*e is always even: a and a+1 have opposite parity.
    Int half = exact_halve((d.a + 1) * d.a * s.invariant());
    return (d.a + 1) * (d.b + 1 - s.genus()) - half;
}

Int rank2_chi(const RuledSurface& s, const DivisorClass& c1, Int c2) {
    const DivisorClass k = canonical_class(s);
    Int half = exact_halve(intersect(c1, c1 - k, s));
    return 2 * s.chi_structure_sheaf() + half - c2;
}

std::pair<DivisorClass, Int> twist_chern(const DivisorClass& c1, Int c2,
                                         const DivisorClass& d,
                                         const RuledSurface& s) {
    DivisorClass c1t = c1 + 2 * d;
    Int c2t = c2 + intersect(c1, d, s) + intersect(d, d, s);
    return {c1t, c2t};
}

}  // namespace ulrich
