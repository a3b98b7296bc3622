#pragma once

#include "plqi/pl_map.hpp"

#include <optional>

namespace plqi {

enum class DivergentEnd { plus_infinity, minus_infinity, both };

// Exact verdict on sup |f - g| over the whole line. For eventually affine
// maps the sup is finite exactly when the tail slopes of f and g agree at
// both ends; the difference is then piecewise linear with constant tails, so
// its extrema sit on the union of the knot x's.
struct DifferenceVerdict {
    bool bounded;
    std::optional<Rational> sup;             // present iff bounded
    std::optional<DivergentEnd> divergent_end;  // present iff unbounded
};

DifferenceVerdict sup_difference(const PLMap& f, const PLMap& g);

// True iff sup |f - id| is finite, i.e. f and the identity represent the same
// quasi-isometry class.
bool in_kernel(const PLMap& f);

// True iff sup |f - g| is finite; an equivalence relation.
bool qi_equivalent(const PLMap& f, const PLMap& g);

// Multiplicative bi-Lipschitz constant: K >= 1 with
// |t1 - t2| / K <= |f(t1) - f(t2)| <= K |t1 - t2| for all t1, t2. Any K' > K
// then serves as a quasi-isometry constant with additive part absorbed.
struct QIParameters {
    Rational K;
};

QIParameters qi_parameters(const PLMap& f);

enum class EndAction { fix, swap };

// Orientation-preserving maps fix the two ends of the line, reversing ones
// swap them.
EndAction end_action(const PLMap& f);

// translation(-f(0)) composed with f: fixes 0 and stays in the class of f.
PLMap normalize_at_zero(const PLMap& f);

}  // namespace plqi
