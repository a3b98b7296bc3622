#include "plqi/structure.hpp"

#include "plqi/qi.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace plqi;

namespace {

const PLMap f0 = PLMap({Knot{Rational(0), Rational(0)}}, Rational(1), Rational(2));

PLMap power_of_reflection(int exponent) {
    return exponent == 0 ? PLMap::identity() : PLMap::reflection();
}

}  // namespace

TEST_CASE("orientation splitting") {
    OrientationSplit s = split_orientation(PLMap::reflection());
    CHECK(s.positive_part == PLMap::identity());
    CHECK(s.reflection_exponent == 1);

    s = split_orientation(f0);
    CHECK(s.positive_part == f0);
    CHECK(s.reflection_exponent == 0);

    s = split_orientation(PLMap::affine(Rational(-2), Rational(0)));
    CHECK(s.positive_part == PLMap::affine(Rational(2), Rational(0)));
    CHECK(s.reflection_exponent == 1);

    testing::Corpus corpus(41);
    for (int i = 0; i < 100; ++i) {
        PLMap f = corpus.random_map();
        OrientationSplit split = split_orientation(f);
        CHECK(split.positive_part.orientation() == Orientation::preserving);
        CHECK(compose(split.positive_part, power_of_reflection(split.reflection_exponent)) == f);
    }
}

TEST_CASE("plus/minus splitting on fixed examples") {
    PlusMinusSplit s = plus_minus_split(f0);
    CHECK(s.plus == f0);
    CHECK(s.minus == PLMap::identity());

    const PLMap f1({Knot{Rational(0), Rational(0)}}, Rational(1, 2), Rational(3));
    s = plus_minus_split(f1);
    CHECK(s.plus == PLMap({Knot{Rational(0), Rational(0)}}, Rational(1), Rational(3)));
    CHECK(s.minus == PLMap({Knot{Rational(0), Rational(0)}}, Rational(1, 2), Rational(1)));
    CHECK(compose(s.plus, s.minus) == f1);

    s = plus_minus_split(PLMap::identity());
    CHECK(s.plus == PLMap::identity());
    CHECK(s.minus == PLMap::identity());
}

TEST_CASE("plus/minus splitting rejects bad inputs") {
    CHECK_THROWS_AS(plus_minus_split(PLMap::reflection()), std::domain_error);
    CHECK_THROWS_AS(plus_minus_split(PLMap::translation(Rational(1))), std::domain_error);
}

TEST_CASE("plus/minus splitting factors exactly on a random corpus") {
    testing::Corpus corpus(42);
    for (int i = 0; i < 100; ++i) {
        PLMap f = corpus.random_preserving_fixing_zero();
        PlusMinusSplit s = plus_minus_split(f);
        CHECK(compose(s.plus, s.minus) == f);
        CHECK(classify_membership(s.plus).identity_near_minus_infinity);
        CHECK(classify_membership(s.minus).identity_near_plus_infinity);
        for (int j = 0; j < 10; ++j) {
            Rational t = -corpus.rational_in(0, 20, 4);
            CHECK(s.plus(t) == t);
            Rational u = corpus.rational_in(0, 20, 4);
            CHECK(s.minus(u) == u);
            CHECK(s.plus(u) == f(u));
            CHECK(s.minus(t) == f(t));
        }
    }
}

TEST_CASE("reflection conjugation mirrors a map through the origin") {
    CHECK(rho_conjugate(f0) == PLMap({Knot{Rational(0), Rational(0)}}, Rational(2), Rational(1)));
    CHECK(rho_conjugate(PLMap::identity()) == PLMap::identity());
    CHECK(rho_conjugate(rho_conjugate(f0)) == f0);

    testing::Corpus corpus(43);
    for (int i = 0; i < 100; ++i) {
        PLMap f = corpus.random_map();
        PLMap conj = rho_conjugate(f);
        CHECK(rho_conjugate(conj) == f);
        CHECK(conj == compose(PLMap::reflection(), compose(f, PLMap::reflection())));
        for (int j = 0; j < 5; ++j) {
            Rational t = corpus.rational_in(-20, 20, 4);
            CHECK(conj(t) == -f(-t));
        }
    }
}

TEST_CASE("reflection conjugation swaps the half-line memberships") {
    testing::Corpus corpus(44);
    for (int i = 0; i < 100; ++i) {
        PLMap f = corpus.random_p_plus(static_cast<testing::Corpus::Tail>(i % 3));
        MembershipFlags before = classify_membership(f);
        MembershipFlags after = classify_membership(rho_conjugate(f));
        CHECK(before.identity_near_minus_infinity);
        CHECK(after.identity_near_plus_infinity);
        CHECK(after.identity_near_minus_infinity == before.identity_near_plus_infinity);
    }
}

TEST_CASE("membership flags on fixed examples") {
    MembershipFlags flags = classify_membership(f0);
    CHECK(flags.identity_near_minus_infinity);
    CHECK_FALSE(flags.identity_near_plus_infinity);
    CHECK(flags.fixes_zero);
    CHECK(flags.orientation_preserving);
    CHECK_FALSE(flags.compactly_supported);

    const PLMap bump({Knot{Rational(0), Rational(0)}, Knot{Rational(1), Rational(2)},
                      Knot{Rational(3), Rational(3)}},
                     Rational(1), Rational(1));
    flags = classify_membership(bump);
    CHECK(flags.compactly_supported);
    CHECK(flags.identity_near_minus_infinity);
    CHECK(flags.identity_near_plus_infinity);

    flags = classify_membership(PLMap::reflection());
    CHECK(flags.fixes_zero);
    CHECK_FALSE(flags.orientation_preserving);
    CHECK_FALSE(flags.identity_near_minus_infinity);

    flags = classify_membership(PLMap::translation(Rational(5)));
    CHECK_FALSE(flags.fixes_zero);
    CHECK_FALSE(flags.identity_near_minus_infinity);  // germ is y = t + 5, not y = t
}

TEST_CASE("compactly supported maps are kernel classes") {
    testing::Corpus corpus(45);
    for (int i = 0; i < 100; ++i) {
        PLMap f = corpus.random_bump();
        CHECK(classify_membership(f).compactly_supported);
        CHECK(in_kernel(f));
    }
}

TEST_CASE("maps supported on complementary half-lines commute") {
    testing::Corpus corpus(46);
    for (int i = 0; i < 80; ++i) {
        PLMap f = corpus.random_p_plus_at(static_cast<testing::Corpus::Tail>(i % 3), 0);
        PLMap g = rho_conjugate(
            corpus.random_p_plus_at(static_cast<testing::Corpus::Tail>((i + 1) % 3), 0));
        CHECK(compose(f, g) == compose(g, f));
    }
}
