#include "convexdiff/convex_set.hpp"
#include "convexdiff/errors.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using convexdiff::ConvexityError;
using convexdiff::ConvexityViolation;
using convexdiff::ConvexSet;
using convexdiff::GapSequence;
using convexdiff::Integer;
using convexdiff::Rational;
using convexdiff::ValidationError;

namespace {

std::vector<Rational> rationals(std::initializer_list<long long> values) {
    std::vector<Rational> out;
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("validate accepts convex sequences, including the vacuous sizes") {
    CHECK_NOTHROW(ConvexSet::validate(rationals({5})));
    CHECK_NOTHROW(ConvexSet::validate(rationals({0, 10})));
    CHECK_NOTHROW(ConvexSet::validate(rationals({0, 1, 3, 6})));
    CHECK_NOTHROW(ConvexSet::validate({Rational(0), Rational(1), Rational(5, 2), Rational(5)}));
    CHECK(!ConvexSet::check(rationals({-3, -2, 0, 3})).has_value());
}

TEST_CASE("the first violation is reported with its 1-based index") {
    auto empty = ConvexSet::check({});
    REQUIRE(empty.has_value());
    CHECK(empty->kind == ConvexityViolation::Kind::Empty);

    auto not_sorted = ConvexSet::check(rationals({0, 2, 2, 7}));
    REQUIRE(not_sorted.has_value());
    CHECK(not_sorted->kind == ConvexityViolation::Kind::NotSorted);
    CHECK(not_sorted->index == 2);
    CHECK(not_sorted->describe() == "NotSorted(2): a_2 >= a_3");

    auto not_convex = ConvexSet::check(rationals({0, 1, 2, 4}));
    REQUIRE(not_convex.has_value());
    CHECK(not_convex->kind == ConvexityViolation::Kind::NotConvex);
    CHECK(not_convex->index == 2);
    CHECK(not_convex->describe() == "NotConvex(2): a_2 - a_1 >= a_3 - a_2");

    // Equal gaps are not convex either: the increase must be strict.
    CHECK(ConvexSet::check(rationals({0, 2, 4, 7})).has_value());

    try {
        ConvexSet::validate(rationals({0, 1, 3, 5}));
        FAIL("expected a convexity error");
    } catch (const ConvexityError& e) {
        CHECK(e.violation().kind == ConvexityViolation::Kind::NotConvex);
        CHECK(e.violation().index == 3);
        CHECK(std::string(e.what()) == "NotConvex(3): a_3 - a_2 >= a_4 - a_3");
    }
}

TEST_CASE("gap sequences validate strict positive increase") {
    CHECK_NOTHROW(GapSequence::validate({1}));
    CHECK_NOTHROW(GapSequence::validate({3, 5, 8}));
    CHECK_THROWS_AS(GapSequence::validate({0, 1}), ValidationError);
    CHECK_THROWS_AS(GapSequence::validate({-2}), ValidationError);
    CHECK_THROWS_AS(GapSequence::validate({2, 2}), ValidationError);
    CHECK_THROWS_AS(GapSequence::validate({3, 1}), ValidationError);

    const ConvexSet set = ConvexSet::from_gap_sequence(GapSequence::validate({1, 2, 3}));
    CHECK(set.elements() == rationals({0, 1, 3, 6}));
}

TEST_CASE("element access is 1-based and bounds-checked") {
    const ConvexSet set = ConvexSet::validate(rationals({0, 1, 3, 6}));
    CHECK(set.size() == 4);
    CHECK(set.element(1) == Rational(0));
    CHECK(set.element(4) == Rational(6));
    CHECK_THROWS_AS(set.element(0), std::out_of_range);
    CHECK_THROWS_AS(set.element(5), std::out_of_range);
}

TEST_CASE("gaps are the consecutive differences") {
    const ConvexSet set = ConvexSet::validate(rationals({0, 1, 3, 6}));
    CHECK(set.gaps() == rationals({1, 2, 3}));
    CHECK_THROWS_AS(ConvexSet::validate(rationals({5})).gaps(), ValidationError);
}

TEST_CASE("dilation clears denominators with the least factor") {
    const ConvexSet set =
        ConvexSet::validate({Rational(0), Rational(1), Rational(5, 2), Rational(5)});
    auto [dilated, scale] = set.dilate_to_integers();
    CHECK(scale == 2);
    CHECK(dilated.elements() == rationals({0, 2, 5, 10}));

    const ConvexSet integral = ConvexSet::validate(rationals({0, 1, 3, 6}));
    auto [same, one] = integral.dilate_to_integers();
    CHECK(one == 1);
    CHECK(same == integral);
}

TEST_CASE("translate and scale are exact affine maps") {
    const ConvexSet set = ConvexSet::validate(rationals({0, 1, 3}));
    CHECK(set.translate(Rational(5)).elements() == rationals({5, 6, 8}));
    CHECK(set.scale(Rational(2)).elements() == rationals({0, 2, 6}));
    CHECK(set.translate(Rational(-1, 2)).element(1) == Rational(-1, 2));
    CHECK(set.translate(Rational(7)).gaps() == set.gaps()); // translation keeps gaps
    CHECK_THROWS_AS(set.scale(Rational(0)), ValidationError);
    CHECK_THROWS_AS(set.scale(Rational(-2)), ValidationError);
}

TEST_CASE("random convex sets stay convex under dilation and affine maps") {
    std::mt19937_64 rng(20260819);
    for (int round = 0; round < 50; ++round) {
        auto elements = oracles::random_convex_elements(rng, 3 + round % 9);
        const ConvexSet set = ConvexSet::validate(elements); // generator output is convex
        auto [dilated, scale] = set.dilate_to_integers();
        CHECK(!ConvexSet::check(dilated.elements()).has_value());
        for (const Rational& a : dilated.elements())
            CHECK(a.is_integer());
        CHECK(scale >= 1);
        CHECK(!ConvexSet::check(set.translate(Rational(-7, 3)).elements()).has_value());
        CHECK(!ConvexSet::check(set.scale(Rational(3, 2)).elements()).has_value());
    }
}
