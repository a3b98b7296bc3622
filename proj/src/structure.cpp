#include "plqi/structure.hpp"

#include <stdexcept>

namespace plqi {

OrientationSplit split_orientation(const PLMap& f) {
    if (f.orientation() == Orientation::preserving)
        return OrientationSplit{f, 0};
    return OrientationSplit{compose(f, PLMap::reflection()), 1};
}

PlusMinusSplit plus_minus_split(const PLMap& f) {
    if (f.orientation() != Orientation::preserving)
        throw std::domain_error("plus_minus_split: map must preserve orientation");
    if (f(Rational(0)) != 0)
        throw std::domain_error("plus_minus_split: map must fix 0");

    std::vector<Knot> plus_knots{Knot{Rational(0), Rational(0)}};
    std::vector<Knot> minus_knots;
    for (const Knot& k : f.knots()) {
        if (k.x > 0)
            plus_knots.push_back(k);
        else if (k.x < 0)
            minus_knots.push_back(k);
    }
    minus_knots.push_back(Knot{Rational(0), Rational(0)});

    PLMap plus(std::move(plus_knots), Rational(1), f.right_slope());
    PLMap minus(std::move(minus_knots), f.left_slope(), Rational(1));
    return PlusMinusSplit{std::move(plus), std::move(minus)};
}

PLMap rho_conjugate(const PLMap& f) {
    std::vector<Knot> knots;
    knots.reserve(f.knots().size());
    for (auto it = f.knots().rbegin(); it != f.knots().rend(); ++it)
        knots.push_back(Knot{-it->x, -it->y});
    return PLMap(std::move(knots), f.right_slope(), f.left_slope());
}

MembershipFlags classify_membership(const PLMap& f) {
    const Knot& first = f.knots().front();
    const Knot& last = f.knots().back();
    MembershipFlags flags{};
    flags.fixes_zero = f(Rational(0)) == 0;
    flags.orientation_preserving = f.orientation() == Orientation::preserving;
    flags.identity_near_minus_infinity = f.left_slope() == 1 && first.y == first.x;
    flags.identity_near_plus_infinity = f.right_slope() == 1 && last.y == last.x;
    flags.compactly_supported =
        flags.identity_near_minus_infinity && flags.identity_near_plus_infinity;
    return flags;
}

}  // namespace plqi
