#include "plqi/witness.hpp"

#include "plqi/qi.hpp"
#include "plqi/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace plqi {

Rational DivergentSequence::term(std::size_t k) const {
    if (k < prefix.size())
        return prefix[k];
    Rational b = prefix.back();
    for (std::size_t i = prefix.size(); i <= k; ++i)
        b = rule.a * b + rule.c;
    return b;
}

DivergentSequence extract_divergent_sequence(const PLMap& f, std::size_t count) {
    if (count < 4)
        count = 4;
    const MembershipFlags flags = classify_membership(f);
    if (!flags.orientation_preserving || !flags.identity_near_minus_infinity)
        throw std::domain_error(
            "extract_divergent_sequence: map must preserve orientation and be the identity "
            "near -infinity");
    if (in_kernel(f))
        throw std::domain_error(
            "extract_divergent_sequence: map stays boundedly close to the identity");

    const SequenceCase kind =
        f.right_slope() > 1 ? SequenceCase::direct : SequenceCase::inverse;
    const PLMap driver = kind == SequenceCase::direct ? f : invert(f);

    const Knot& last = driver.knots().back();
    const Rational slope = driver.right_slope();
    const Rational intercept = last.y - slope * last.x;

    Rational b = std::max(Rational(1), Rational(last.x + 1));
    if (driver(b) <= b)
        b = -intercept / (slope - 1) + 1;  // start beyond the tail fixed point

    DivergentSequence seq{kind, AffineRule{3 * slope, 3 * intercept + 1}, {}};
    seq.prefix.reserve(count);
    seq.prefix.push_back(b);
    for (std::size_t k = 1; k < count; ++k) {
        b = 3 * driver(b) + 1;
        seq.prefix.push_back(b);
    }
    return seq;
}

LazyPLMap::LazyPLMap(PLMap driver, DivergentSequence sequence)
    : driver_(std::move(driver)), sequence_(std::move(sequence)) {
    if (driver_.orientation() != Orientation::preserving)
        throw std::invalid_argument("LazyPLMap: driver must preserve orientation");
    if (!(driver_.right_slope() > 1))
        throw std::invalid_argument("LazyPLMap: driver must expand near +infinity");
    const auto& prefix = sequence_.prefix;
    if (prefix.size() < 4)
        throw std::invalid_argument("LazyPLMap: sequence must materialize at least 4 terms");
    if (prefix.front() < 1)
        throw std::invalid_argument("LazyPLMap: sequence must start at 1 or beyond");
    if (!(prefix.front() > driver_.knots().back().x))
        throw std::invalid_argument(
            "LazyPLMap: sequence must start beyond the driver's last break");
    for (std::size_t k = 0; k + 1 < prefix.size(); ++k) {
        if (!(prefix[k] < prefix[k + 1]))
            throw std::invalid_argument("LazyPLMap: sequence must be strictly increasing");
        if (!(prefix[k + 1] > 3 * driver_(prefix[k])))
            throw std::invalid_argument(
                "LazyPLMap: sequence violates b[k+1] > 3*driver(b[k])");
    }
    for (const Rational& b : prefix)
        if (!(driver_(b) > b))
            throw std::invalid_argument(
                "LazyPLMap: driver must move every sequence term to the right");
    const Knot& last = driver_.knots().back();
    const Rational slope = driver_.right_slope();
    const Rational intercept = last.y - slope * last.x;
    if (sequence_.rule.a != 3 * slope || sequence_.rule.c != 3 * intercept + 1)
        throw std::invalid_argument(
            "LazyPLMap: recurrence does not match the driver's tail germ");
}

void LazyPLMap::materialize_through(std::size_t k) const {
    while (memo_.size() <= k) {
        const std::size_t idx = memo_.size();
        Rational lower = idx == 0 ? sequence_.prefix.front() : memo_.back().upper;
        Rational break_x = driver_(lower);
        Rational break_y = (lower + break_x) / 2;
        Rational upper = idx + 1 < sequence_.prefix.size() ? sequence_.prefix[idx + 1]
                                                           : 3 * break_x + 1;
        memo_.push_back(Interval{std::move(lower), std::move(break_x), std::move(break_y),
                                 std::move(upper)});
    }
}

const LazyPLMap::Interval& LazyPLMap::interval(std::size_t k) const {
    materialize_through(k);
    return memo_[k];
}

Rational LazyPLMap::operator()(const Rational& t) const {
    if (t <= threshold())
        return t;
    while (memo_.empty() || memo_.back().upper < t)
        materialize_through(memo_.size());
    auto it = std::lower_bound(memo_.begin(), memo_.end(), t,
                               [](const Interval& iv, const Rational& v) {
                                   return iv.upper < v;
                               });
    const Interval& iv = *it;
    if (t <= iv.break_x) {
        Rational slope = (iv.break_y - iv.lower) / (iv.break_x - iv.lower);
        return iv.lower + slope * (t - iv.lower);
    }
    Rational slope = (iv.upper - iv.break_y) / (iv.upper - iv.break_x);
    return iv.break_y + slope * (t - iv.break_x);
}

LazyPLMap build_witness_g(const PLMap& f, const DivergentSequence& seq) {
    PLMap driver = seq.kind == SequenceCase::direct ? f : invert(f);
    return LazyPLMap(std::move(driver), seq);
}

PLMap build_witness_h() {
    return PLMap({Knot{Rational(0), Rational(0)}}, Rational(1), Rational(2));
}

}  // namespace plqi
