#include "plqi/qi.hpp"

namespace plqi {

DifferenceVerdict sup_difference(const PLMap& f, const PLMap& g) {
    const bool left_match = f.left_slope() == g.left_slope();
    const bool right_match = f.right_slope() == g.right_slope();
    if (left_match && right_match) {
        Rational sup(0);
        auto consider = [&](const Rational& x) {
            Rational d = rational_abs(f(x) - g(x));
            if (d > sup)
                sup = std::move(d);
        };
        for (const Knot& k : f.knots())
            consider(k.x);
        for (const Knot& k : g.knots())
            consider(k.x);
        return DifferenceVerdict{true, std::move(sup), std::nullopt};
    }
    DivergentEnd end = DivergentEnd::both;
    if (left_match)
        end = DivergentEnd::plus_infinity;
    else if (right_match)
        end = DivergentEnd::minus_infinity;
    return DifferenceVerdict{false, std::nullopt, end};
}

bool in_kernel(const PLMap& f) {
    return sup_difference(f, PLMap::identity()).bounded;
}

bool qi_equivalent(const PLMap& f, const PLMap& g) {
    return sup_difference(f, g).bounded;
}

QIParameters qi_parameters(const PLMap& f) {
    return QIParameters{slope_summary(f).bound};
}

EndAction end_action(const PLMap& f) {
    return f.orientation() == Orientation::preserving ? EndAction::fix : EndAction::swap;
}

PLMap normalize_at_zero(const PLMap& f) {
    return compose(PLMap::translation(-f(Rational(0))), f);
}

}  // namespace plqi
