#include "convexdiff/construction.hpp"
#include "convexdiff/errors.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <string>

using convexdiff::construct;
using convexdiff::ConstructionResult;
using convexdiff::ConvexSet;
using convexdiff::default_delta;
using convexdiff::glue;
using convexdiff::GluedResult;
using convexdiff::Rational;
using convexdiff::ValidationError;

TEST_CASE("small constructions, element by element") {
    const ConstructionResult one = construct(1);
    CHECK(one.set.elements() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(one.rich_difference == Rational(1));

    const ConstructionResult two = construct(2, Rational(1, 2));
    CHECK(two.set.elements() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(5, 2), Rational(5)});
    CHECK(two.rich_difference == Rational(5, 2));

    const ConstructionResult three = construct(3, Rational(1, 4));
    CHECK(three.set.elements() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(9, 4), Rational(15, 4),
                                Rational(6), Rational(39, 4)});
    CHECK(three.rich_difference == Rational(15, 4));
    auto [dilated, scale] = three.set.dilate_to_integers();
    CHECK(scale == 4);
    CHECK(dilated.elements() ==
          std::vector<Rational>{Rational(0), Rational(4), Rational(9), Rational(15),
                                Rational(24), Rational(39)});
}

TEST_CASE("default perturbation sits inside the admissible range") {
    CHECK(default_delta(1) == Rational(1));
    CHECK(default_delta(2) == Rational(1));
    CHECK(default_delta(3) == Rational(1, 4));
    CHECK(default_delta(10) == Rational(1, 18));
    for (unsigned long m = 3; m <= 60; ++m)
        CHECK(default_delta(m) < Rational(1, static_cast<long long>(m - 2)));
}

TEST_CASE("the rich difference is hit exactly m times") {
    for (unsigned long m = 1; m <= 40; ++m) {
        const ConstructionResult built = construct(m);
        CHECK(built.set.size() == 2 * m);
        CHECK(built.rich_difference == built.set.element(m + 1));
        CHECK(oracles::brute_rep_diff(built.set.elements(), built.rich_difference) ==
              static_cast<long long>(m));
    }
}

TEST_CASE("every second-half element reuses an odd-indexed one") {
    // d = a_{m+1} - a_1 = a_{m+2} - a_3 = ... = a_{2m} - a_{2m-1}
    for (unsigned long m : {1ul, 2ul, 3ul, 7ul, 20ul, 41ul}) {
        const ConstructionResult built = construct(m);
        for (unsigned long i = 0; i + 1 <= m; ++i)
            CHECK(built.set.element(m + 1 + i) - built.set.element(1 + 2 * i) ==
                  built.rich_difference);
    }
}

TEST_CASE("the perturbation bound is sharp") {
    for (unsigned long m = 3; m <= 20; ++m) {
        const Rational boundary(1, static_cast<long long>(m - 2));
        CHECK_THROWS_AS(construct(m, boundary), ValidationError);
        CHECK_THROWS_AS(construct(m, boundary + Rational(1, 1000)), ValidationError);

        const Rational just_below = boundary - Rational(1, 1000000);
        const ConstructionResult built = construct(m, just_below);
        // The tight spot is index m+1; its margin collapses linearly in delta.
        const Rational margin = (built.set.element(m + 2) - built.set.element(m + 1)) -
                                (built.set.element(m + 1) - built.set.element(m));
        CHECK(margin == Rational(static_cast<long long>(m - 2), 1000000));
    }

    try {
        construct(5, Rational(1, 3));
        FAIL("expected rejection at the boundary");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("1/3") != std::string::npos);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(construct(0), ValidationError);
    CHECK_THROWS_AS(construct(4, Rational(0)), ValidationError);
    CHECK_THROWS_AS(construct(4, Rational(-1, 2)), ValidationError);
    CHECK_NOTHROW(construct(2, Rational(100))); // no upper constraint below m = 3
}

TEST_CASE("gluing two small examples, element by element") {
    const GluedResult pairs = glue(1, 3);
    CHECK(pairs.set.elements() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(3), Rational(6), Rational(10),
                                Rational(15)});
    CHECK(pairs.rich_differences ==
          std::vector<Rational>{Rational(1), Rational(3), Rational(5)});

    const GluedResult two_by_two = glue(2, 2);
    CHECK(two_by_two.set.elements() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(3), Rational(6), Rational(10),
                                Rational(15), Rational(25), Rational(40)});
    CHECK(two_by_two.rich_differences == std::vector<Rational>{Rational(3), Rational(15)});
}

TEST_CASE("glued sets deliver `copies` distinct rich differences") {
    for (unsigned long t = 1; t <= 4; ++t) {
        for (unsigned long copies = 1; copies <= 3; ++copies) {
            const GluedResult built = glue(t, copies);
            CHECK(built.set.size() == 2 * t * copies);
            CHECK(built.rich_differences.size() == copies);

            std::set<Rational> distinct(built.rich_differences.begin(),
                                        built.rich_differences.end());
            CHECK(distinct.size() == copies);
            for (const Rational& d : built.rich_differences)
                CHECK(oracles::brute_rep_diff(built.set.elements(), d) >=
                      static_cast<long long>(t));
        }
    }
    CHECK_THROWS_AS(glue(0, 2), ValidationError);
    CHECK_THROWS_AS(glue(2, 0), ValidationError);
}
