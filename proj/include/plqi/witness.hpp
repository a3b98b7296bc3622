#pragma once

#include "plqi/pl_map.hpp"

#include <cstddef>
#include <vector>

namespace plqi {

enum class SequenceCase { direct, inverse };

// t -> a*t + c.
struct AffineRule {
    Rational a;
    Rational c;
    bool operator==(const AffineRule&) const = default;
};

// Strictly increasing divergent sample points b_1 < b_2 < ... along which a
// driving map runs away from the identity:
//   b_{k+1} > 3 * driver(b_k)   and   driver(b_k) - b_k strictly increasing.
// `kind` records whether the driver is the inspected map itself (direct) or
// its inverse (inverse). Beyond the last break of the driver the greedy step
// b_{k+1} = 3*driver(b_k) + 1 collapses to the affine recurrence `rule`,
// which extends the materialized prefix to any index.
struct DivergentSequence {
    SequenceCase kind;
    AffineRule rule;
    std::vector<Rational> prefix;  // b_1..b_m, m >= 4

    const Rational& b1() const { return prefix.front(); }

    // 0-based term, extending past the prefix via the recurrence.
    Rational term(std::size_t k) const;
};

// Builds the greedy divergent sequence for f, which must preserve
// orientation, be the identity near -infinity and not be a kernel class.
// If the right tail slope of f exceeds 1 the driver is f itself (direct),
// otherwise the driver is invert(f) (inverse). The start b_1 is the smallest
// of 1, last break + 1 pushed far enough right that driver(b_1) > b_1.
// At least max(count, 4) terms are materialized.
// Throws std::domain_error when the preconditions fail.
DivergentSequence extract_divergent_sequence(const PLMap& f, std::size_t count = 4);

// Piecewise-linear homeomorphism with one break point inside each interval
// J_k = [b_k, b_{k+1}] and infinitely many break points overall, generated on
// demand: identity on (-infinity, b_1]; each J_k maps onto itself with the
// interior break at driver(b_k) sent to (b_k + driver(b_k)) / 2. Every
// generated slope lies in [1/2, 5/4]: exactly 1/2 left of the break and
// strictly inside (1, 5/4) right of it.
//
// The memo of generated intervals is append-only and extended lazily from
// const evaluation; an instance must be confined to one thread of control at
// a time.
class LazyPLMap {
public:
    // Validates the driver/sequence pair: the driver must preserve
    // orientation with right tail slope > 1; the prefix must start at >= 1,
    // beyond the driver's last break, satisfy b_{k+1} > 3*driver(b_k) and
    // driver(b_k) > b_k throughout; and the recurrence must match the
    // driver's tail germ. Throws std::invalid_argument otherwise.
    LazyPLMap(PLMap driver, DivergentSequence sequence);

    const Rational& threshold() const { return sequence_.prefix.front(); }
    const PLMap& driver() const { return driver_; }
    const DivergentSequence& sequence() const { return sequence_; }

    // Exact evaluation; materializes intervals until t is covered.
    Rational operator()(const Rational& t) const;

    struct Interval {
        Rational lower;    // b_k
        Rational break_x;  // driver(b_k)
        Rational break_y;  // (b_k + driver(b_k)) / 2
        Rational upper;    // b_{k+1}
    };

    // 0-based; materializes through index k.
    const Interval& interval(std::size_t k) const;
    std::size_t materialized_intervals() const { return memo_.size(); }

private:
    void materialize_through(std::size_t k) const;

    PLMap driver_;
    DivergentSequence sequence_;
    mutable std::vector<Interval> memo_;
};

// The witness map for a factor that escapes the identity: one new break per
// interval J_k. Derives the driver from `seq.kind` (f itself or invert(f))
// and rechecks the sequence conditions against it.
LazyPLMap build_witness_g(const PLMap& f, const DivergentSequence& seq);

// The witness against orientation-reversing classes: one break at the
// origin, slope 1 left of it and slope 2 right of it.
PLMap build_witness_h();

struct DisplacementSample {
    Rational t;
    Rational displacement;
    bool operator==(const DisplacementSample&) const = default;
};

// Commutator displacement f(w(t)) - w(f(t)) at each point, computed by four
// exact evaluations; no symbolic composition is formed, so w may have
// infinitely many break points.
template <typename MapF, typename MapW>
std::vector<DisplacementSample> displacement_series(const MapF& f, const MapW& w,
                                                    const std::vector<Rational>& points) {
    std::vector<DisplacementSample> out;
    out.reserve(points.size());
    for (const Rational& t : points)
        out.push_back(DisplacementSample{t, f(w(t)) - w(f(t))});
    return out;
}

}  // namespace plqi
