#pragma once

#include "plqi/rational.hpp"

#include <iosfwd>
#include <vector>

namespace plqi {

struct Knot {
    Rational x;
    Rational y;
    bool operator==(const Knot&) const = default;
};

enum class Orientation { preserving, reversing };

// Eventually affine piecewise-linear homeomorphism of the real line: a
// strictly increasing knot list plus an affine germ at each end. Every slope
// (segment or tail) is nonzero and all slopes share one sign, so the map is a
// homeomorphism and its slope set is automatically bounded away from 0 and
// infinity.
//
// Instances are immutable and always canonical: knots sit exactly at the
// break points, except that a pure affine map keeps a single anchor knot at
// x = 0 so the list is never empty. Structural equality of canonical forms
// therefore coincides with equality as functions.
class PLMap {
public:
    // Validates and canonicalizes. Collinear knots are removed; strictly
    // increasing knot x's, nonzero slopes and a single shared slope sign are
    // required, otherwise std::invalid_argument is thrown.
    PLMap(std::vector<Knot> knots, Rational left_slope, Rational right_slope);

    static PLMap identity();
    static PLMap affine(const Rational& a, const Rational& b);  // t -> a*t + b, a != 0
    static PLMap reflection();                                  // t -> -t
    static PLMap translation(const Rational& c);                // t -> t + c

    // Exact evaluation.
    Rational operator()(const Rational& t) const;

    const std::vector<Knot>& knots() const { return knots_; }
    const Rational& left_slope() const { return left_slope_; }
    const Rational& right_slope() const { return right_slope_; }

    Orientation orientation() const {
        return left_slope_ > 0 ? Orientation::preserving : Orientation::reversing;
    }
    bool is_identity() const;

    bool operator==(const PLMap&) const = default;

private:
    std::vector<Knot> knots_;
    Rational left_slope_;
    Rational right_slope_;
};

// Exact composition t -> f(g(t)). The result's knot x-set is contained in
// B(g) union g^{-1}(B(f)) before canonicalization.
PLMap compose(const PLMap& f, const PLMap& g);

// Exact inverse; compose(invert(f), f) == PLMap::identity().
PLMap invert(const PLMap& f);

struct SlopeSummary {
    std::vector<Rational> slopes;  // ascending, deduplicated slope set
    std::vector<Rational> breaks;  // ascending break points; empty for affine maps
    Rational bound;                // tight M >= 1 with 1/M <= |s| <= M over slopes
    Orientation orientation;
};

SlopeSummary slope_summary(const PLMap& f);

std::ostream& operator<<(std::ostream& os, const PLMap& f);

}  // namespace plqi
