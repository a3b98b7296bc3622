#pragma once

#include "plqi/pl_map.hpp"

namespace plqi {

// f = positive_part composed with reflection^exponent, with positive_part
// orientation preserving.
struct OrientationSplit {
    PLMap positive_part;
    int reflection_exponent;  // 0 or 1
};

OrientationSplit split_orientation(const PLMap& f);

// Factorization of an orientation-preserving f with f(0) = 0 into a part
// supported on [0, +inf) and a part supported on (-inf, 0]:
// compose(plus, minus) == f, plus(t) = t for t <= 0, minus(s) = s for s >= 0.
struct PlusMinusSplit {
    PLMap plus;
    PLMap minus;
};

// Throws std::domain_error on orientation-reversing input or f(0) != 0.
PlusMinusSplit plus_minus_split(const PLMap& f);

// Conjugation by the reflection: t -> -f(-t). An involution that exchanges
// behavior at the two ends of the line.
PLMap rho_conjugate(const PLMap& f);

struct MembershipFlags {
    bool fixes_zero;
    bool orientation_preserving;
    bool identity_near_minus_infinity;  // left tail germ is exactly y = t
    bool identity_near_plus_infinity;   // right tail germ is exactly y = t
    bool compactly_supported;           // both of the above
};

MembershipFlags classify_membership(const PLMap& f);

}  // namespace plqi
