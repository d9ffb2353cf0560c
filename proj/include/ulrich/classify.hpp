#pragma once

#include <optional>
#include <utility>

#include "ulrich/lattice.hpp"
#include "ulrich/oracle.hpp"

namespace ulrich {

/// Outcome of the line-bundle classification: either no Ulrich line
/// bundles, or exactly one pair (L1, L2) with L1 + L2 = K + 3H.
struct Classification {
    std::optional<std::pair<DivisorClass, DivisorClass>> pair;

    bool empty() const { return !pair.has_value(); }
};

/// The partner K + 3H - d of an Ulrich line bundle; an involution.
DivisorClass ulrich_pair(const DivisorClass& d, const Polarization& h,
                         const RuledSurface& s);

/// Necessary numeric condition: chi(d-H) = chi(d-2H) = 0. Classes passing
/// it are candidates only; full vanishing at g >= 1 needs genericity.
bool numeric_ulrich_line(const DivisorClass& d, const Polarization& h,
                         const RuledSurface& s);

/// Ulrich line bundles exist iff alpha = 1, in which case the pair is
/// L1 = (2b+g-1-e)F and L2 = C0 + (b+g-1)F with general twists.
Classification classify_line_bundles(const RuledSurface& s, const Polarization& h);

/// Cross-validation at g = 0: the exhaustive oracle scan over the box must
/// return exactly the classified classes (empty when alpha >= 2).
bool reconcile_with_oracle(Int e, const Polarization& h, const SearchBox& box);

}  // namespace ulrich
