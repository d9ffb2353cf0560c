#pragma once

#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

/// Exact cohomology dimensions of a line bundle on a Hirzebruch surface.
struct CohTable {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;

    Int chi() const { return h0 - h1 + h2; }
    bool all_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }
    bool operator==(const CohTable& o) const = default;
};

/// Rectangle of (a, b) coefficients for exhaustive scans.
struct SearchBox {
    Int a_min = 0, a_max = -1;
    Int b_min = 0, b_max = -1;

    bool empty() const { return a_min > a_max || b_min > b_max; }

    /// Generous margins around the degrees appearing in the classification:
    /// a in [-2, 3a+3], b in [-3b-3, 3b+3].
    static SearchBox default_for(const Polarization& h) {
        return {-2, 3 * h.alpha() + 3, -3 * h.beta() - 3, 3 * h.beta() + 3};
    }
};

/// (h0, h1, h2) of O(aC0 + bF) on F_e, via pushforward to the base for
/// a >= -1 and Serre duality for a <= -2. Rejects twisted classes (Pic^0
/// is trivial at g = 0) and e < 1.
CohTable cohomology(Int e, const DivisorClass& d);

/// Brute-force Ulrich test for a line bundle: all cohomology of d-H and
/// d-2H vanishes.
bool is_ulrich_line(Int e, const Polarization& h, const DivisorClass& d);

/// All classes in the box passing is_ulrich_line, in lexicographic order.
std::vector<DivisorClass> search_ulrich_lines(Int e, const Polarization& h,
                                              const SearchBox& box);

}  // namespace ulrich
