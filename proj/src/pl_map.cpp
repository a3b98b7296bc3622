#include "plqi/pl_map.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace plqi {

namespace {

int sign_of(const Rational& r) {
    if (r > 0)
        return 1;
    if (r < 0)
        return -1;
    return 0;
}

Rational eval_piecewise(const std::vector<Knot>& knots, const Rational& left_slope,
                        const Rational& right_slope, const Rational& t) {
    const Knot& first = knots.front();
    const Knot& last = knots.back();
    if (t <= first.x)
        return first.y + left_slope * (t - first.x);
    if (t >= last.x)
        return last.y + right_slope * (t - last.x);
    auto hi = std::lower_bound(knots.begin(), knots.end(), t,
                               [](const Knot& k, const Rational& v) { return k.x < v; });
    auto lo = std::prev(hi);
    Rational slope = (hi->y - lo->y) / (hi->x - lo->x);
    return lo->y + slope * (t - lo->x);
}

}  // namespace

PLMap::PLMap(std::vector<Knot> knots, Rational left_slope, Rational right_slope)
    : knots_(std::move(knots)),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
    if (knots_.empty())
        throw std::invalid_argument("PLMap: knot list must be nonempty");
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        if (!(knots_[i].x < knots_[i + 1].x))
            throw std::invalid_argument("PLMap: knot x coordinates must be strictly increasing");

    const int orient = sign_of(left_slope_);
    // slopes[i] is the slope left of knot i; slopes[i+1] the slope right of it.
    std::vector<Rational> slopes;
    slopes.reserve(knots_.size() + 1);
    slopes.push_back(left_slope_);
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
        slopes.push_back((knots_[i + 1].y - knots_[i].y) / (knots_[i + 1].x - knots_[i].x));
    slopes.push_back(right_slope_);
    for (const Rational& s : slopes)
        if (orient == 0 || sign_of(s) != orient)
            throw std::invalid_argument("PLMap: slopes must be nonzero and share one sign");

    std::vector<Knot> genuine;
    genuine.reserve(knots_.size());
    for (std::size_t i = 0; i < knots_.size(); ++i)
        if (slopes[i] != slopes[i + 1])
            genuine.push_back(std::move(knots_[i]));
    if (genuine.empty())
        genuine.push_back(Knot{Rational(0), eval_piecewise(knots_, left_slope_, right_slope_,
                                                           Rational(0))});
    knots_ = std::move(genuine);
}

PLMap PLMap::identity() {
    return affine(Rational(1), Rational(0));
}

PLMap PLMap::affine(const Rational& a, const Rational& b) {
    if (a == 0)
        throw std::invalid_argument("PLMap::affine: slope must be nonzero");
    return PLMap({Knot{Rational(0), b}}, a, a);
}

PLMap PLMap::reflection() {
    return affine(Rational(-1), Rational(0));
}

PLMap PLMap::translation(const Rational& c) {
    return PLMap({Knot{Rational(0), c}}, Rational(1), Rational(1));
}

Rational PLMap::operator()(const Rational& t) const {
    return eval_piecewise(knots_, left_slope_, right_slope_, t);
}

bool PLMap::is_identity() const {
    return left_slope_ == 1 && right_slope_ == 1 && knots_.size() == 1 &&
           knots_.front() == Knot{Rational(0), Rational(0)};
}

PLMap compose(const PLMap& f, const PLMap& g) {
    const PLMap g_inverse = invert(g);
    std::vector<Rational> xs;
    xs.reserve(f.knots().size() + g.knots().size());
    for (const Knot& k : g.knots())
        xs.push_back(k.x);
    for (const Knot& k : f.knots())
        xs.push_back(g_inverse(k.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Knot> knots;
    knots.reserve(xs.size());
    for (Rational& x : xs) {
        Rational y = f(g(x));
        knots.push_back(Knot{std::move(x), std::move(y)});
    }
    const bool g_reversing = g.orientation() == Orientation::reversing;
    Rational left = (g_reversing ? f.right_slope() : f.left_slope()) * g.left_slope();
    Rational right = (g_reversing ? f.left_slope() : f.right_slope()) * g.right_slope();
    return PLMap(std::move(knots), std::move(left), std::move(right));
}

PLMap invert(const PLMap& f) {
    std::vector<Knot> knots;
    knots.reserve(f.knots().size());
    if (f.orientation() == Orientation::preserving) {
        for (const Knot& k : f.knots())
            knots.push_back(Knot{k.y, k.x});
        return PLMap(std::move(knots), 1 / f.left_slope(), 1 / f.right_slope());
    }
    for (auto it = f.knots().rbegin(); it != f.knots().rend(); ++it)
        knots.push_back(Knot{it->y, it->x});
    return PLMap(std::move(knots), 1 / f.right_slope(), 1 / f.left_slope());
}

SlopeSummary slope_summary(const PLMap& f) {
    std::vector<Rational> slopes;
    slopes.push_back(f.left_slope());
    const auto& knots = f.knots();
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        slopes.push_back((knots[i + 1].y - knots[i].y) / (knots[i + 1].x - knots[i].x));
    slopes.push_back(f.right_slope());
    std::sort(slopes.begin(), slopes.end());
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

    std::vector<Rational> breaks;
    const bool affine = knots.size() == 1 && f.left_slope() == f.right_slope();
    if (!affine)
        for (const Knot& k : knots)
            breaks.push_back(k.x);

    Rational bound(1);
    for (const Rational& s : slopes) {
        Rational magnitude = rational_abs(s);
        if (magnitude > bound)
            bound = magnitude;
        Rational reciprocal = 1 / magnitude;
        if (reciprocal > bound)
            bound = reciprocal;
    }
    return SlopeSummary{std::move(slopes), std::move(breaks), std::move(bound), f.orientation()};
}

std::ostream& operator<<(std::ostream& os, const PLMap& f) {
    os << "{knots [";
    for (std::size_t i = 0; i < f.knots().size(); ++i) {
        if (i)
            os << ", ";
        os << '(' << format_rational(f.knots()[i].x) << ", "
           << format_rational(f.knots()[i].y) << ')';
    }
    os << "], left " << format_rational(f.left_slope()) << ", right "
       << format_rational(f.right_slope()) << '}';
    return os;
}

}  // namespace plqi
