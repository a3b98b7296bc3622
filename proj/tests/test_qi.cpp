#include "plqi/qi.hpp"

#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

using namespace plqi;

namespace {

const PLMap f0 = PLMap({Knot{Rational(0), Rational(0)}}, Rational(1), Rational(2));
const PLMap bump = PLMap({Knot{Rational(0), Rational(0)}, Knot{Rational(1), Rational(2)},
                          Knot{Rational(3), Rational(3)}},
                         Rational(1), Rational(1));

}  // namespace

TEST_CASE("sup_difference decides boundedness by tail slopes") {
    DifferenceVerdict v = sup_difference(PLMap::translation(Rational(5)), PLMap::identity());
    CHECK(v.bounded);
    CHECK(*v.sup == 5);

    v = sup_difference(f0, PLMap::identity());
    CHECK_FALSE(v.bounded);
    CHECK(*v.divergent_end == DivergentEnd::plus_infinity);

    v = sup_difference(f0, f0);
    CHECK(v.bounded);
    CHECK(*v.sup == 0);

    v = sup_difference(PLMap::reflection(), PLMap::identity());
    CHECK_FALSE(v.bounded);
    CHECK(*v.divergent_end == DivergentEnd::both);

    v = sup_difference(compose(f0, PLMap::reflection()), PLMap::reflection());
    CHECK_FALSE(v.bounded);
    CHECK(*v.divergent_end == DivergentEnd::minus_infinity);
}

TEST_CASE("sup_difference is symmetric") {
    testing::Corpus corpus(31);
    for (int i = 0; i < 50; ++i) {
        PLMap f = corpus.random_map();
        PLMap g = corpus.random_map();
        DifferenceVerdict a = sup_difference(f, g);
        DifferenceVerdict b = sup_difference(g, f);
        CHECK(a.bounded == b.bounded);
        if (a.bounded)
            CHECK(*a.sup == *b.sup);
    }
}

TEST_CASE("kernel membership") {
    testing::Corpus corpus(32);
    for (int i = 0; i < 20; ++i)
        CHECK(in_kernel(corpus.random_translation()));
    CHECK_FALSE(in_kernel(f0));
    CHECK(in_kernel(bump));
    CHECK(*sup_difference(bump, PLMap::identity()).sup == 1);
}

TEST_CASE("qi_equivalent basics") {
    testing::Corpus corpus(33);
    for (int i = 0; i < 30; ++i) {
        PLMap f = corpus.random_map();
        CHECK(qi_equivalent(f, f));
        CHECK(qi_equivalent(f, compose(PLMap::translation(corpus.rational_in(-9, 9)), f)));
    }
    CHECK_FALSE(qi_equivalent(f0, PLMap::identity()));
}

TEST_CASE("qi_equivalent is an equivalence relation among maps sharing tails") {
    testing::Corpus corpus(34);
    for (int i = 0; i < 60; ++i) {
        Rational left = corpus.positive_slope();
        Rational right = corpus.positive_slope();
        auto make = [&] {
            PLMap base = corpus.random_preserving(3);
            return PLMap(base.knots(), left, right);
        };
        PLMap a = make();
        PLMap b = make();
        PLMap c = make();
        CHECK(qi_equivalent(a, b));
        CHECK(qi_equivalent(b, a));
        CHECK(qi_equivalent(b, c));
        CHECK(qi_equivalent(a, c));
    }
}

TEST_CASE("qi_parameters yields the tight bi-Lipschitz constant") {
    CHECK(qi_parameters(f0).K == 2);
    CHECK(qi_parameters(PLMap::identity()).K == 1);
    CHECK(qi_parameters(PLMap::affine(Rational(1, 3), Rational(7))).K == 3);
}

TEST_CASE("the bi-Lipschitz inequality holds at sampled pairs") {
    testing::Corpus corpus(35);
    for (int i = 0; i < 40; ++i) {
        PLMap f = corpus.random_map();
        Rational k = qi_parameters(f).K;
        for (int j = 0; j < 100; ++j) {
            Rational t1 = corpus.rational_in(-30, 30, 6);
            Rational t2 = corpus.rational_in(-30, 30, 6);
            if (t1 == t2)
                continue;
            Rational spread = rational_abs(f(t1) - f(t2));
            Rational gap = rational_abs(t1 - t2);
            CHECK(spread <= k * gap);
            CHECK(spread >= gap / k);
        }
    }
}

TEST_CASE("end action matches orientation") {
    CHECK(end_action(PLMap::reflection()) == EndAction::swap);
    CHECK(end_action(f0) == EndAction::fix);
    CHECK(end_action(compose(PLMap::reflection(), PLMap::reflection())) == EndAction::fix);
}

TEST_CASE("normalize_at_zero pins the origin and stays in the class") {
    CHECK(normalize_at_zero(PLMap::translation(Rational(5))) == PLMap::identity());
    CHECK(normalize_at_zero(f0) == f0);
    CHECK(normalize_at_zero(PLMap::affine(Rational(2), Rational(3))) ==
          PLMap::affine(Rational(2), Rational(0)));

    testing::Corpus corpus(36);
    for (int i = 0; i < 60; ++i) {
        PLMap f = corpus.random_map();
        PLMap n = normalize_at_zero(f);
        CHECK(n(Rational(0)) == 0);
        CHECK(qi_equivalent(n, f));
        CHECK(*sup_difference(n, f).sup == rational_abs(f(Rational(0))));
    }
}

TEST_CASE("boundedness decision agrees with the window-sampling oracle") {
    testing::Corpus corpus(37);
    for (int i = 0; i < 80; ++i) {
        const bool want_bounded = i % 2 == 0;
        Rational fl = corpus.window_tail();
        Rational fr = corpus.window_tail();
        Rational gl = fl;
        Rational gr = fr;
        if (!want_bounded) {
            while (gl == fl && gr == fr) {
                gl = corpus.window_tail();
                gr = corpus.window_tail();
            }
        }
        PLMap f = corpus.random_window_map(fl, fr);
        PLMap g = corpus.random_window_map(gl, gr);
        DifferenceVerdict verdict = sup_difference(f, g);
        BigInt window = testing::oracle_window(f, g);
        CHECK(verdict.bounded == want_bounded);
        if (verdict.bounded) {
            CHECK(testing::sampled_sup(f, g, window) == *verdict.sup);
        } else {
            Rational near = testing::sampled_sup(f, g, window);
            Rational far = testing::sampled_sup(f, g, 4 * window);
            CHECK(far > near + 1);
        }
    }
}
