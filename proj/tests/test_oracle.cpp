#include <doctest.h>

#include "ulrich/oracle.hpp"

using namespace ulrich;

TEST_CASE("cohomology of line bundles on Hirzebruch surfaces") {
    for (Int e = 1; e <= 3; ++e)
        CHECK(cohomology(e, {0, 0}) == CohTable{1, 0, 0});

    for (Int e = 1; e <= 3; ++e)
        for (Int b = -6; b <= 6; ++b)
            CHECK(cohomology(e, {-1, b}) == CohTable{0, 0, 0});

    CHECK(cohomology(1, {1, 1}) == CohTable{3, 0, 0});
    CHECK(cohomology(1, {2, 0}) == CohTable{1, 1, 0});
}

TEST_CASE("cohomology input guards") {
    CHECK_THROWS_AS(cohomology(0, {1, 1}), InvalidSurface);
    DivisorClass twisted{1, 1, TwistLabel::generator("L1")};
    CHECK_THROWS_AS(cohomology(1, twisted), std::invalid_argument);
}

TEST_CASE("oracle invariants over a box") {
    for (Int e = 1; e <= 3; ++e) {
        RuledSurface s(0, e);
        DivisorClass k = canonical_class(s);
        k.twist = TwistLabel();  // Pic0 is trivial at g = 0
        for (Int a = -8; a <= 8; ++a) {
            for (Int b = -12; b <= 12; ++b) {
                DivisorClass d{a, b};
                CohTable t = cohomology(e, d);
                CHECK(t.h0 >= 0);
                CHECK(t.h1 >= 0);
                CHECK(t.h2 >= 0);
                // chi consistency
                CHECK(t.chi() == euler_char_line(s, d));
                // Serre duality
                CohTable dual = cohomology(e, k - d);
                CHECK(t.h0 == dual.h2);
                CHECK(t.h1 == dual.h1);
                CHECK(t.h2 == dual.h0);
                // h0 vanishes left of the section, grows with the fibre degree
                if (a < 0) CHECK(t.h0 == 0);
                if (a >= 0) CHECK(cohomology(e, {a, b + 1}).h0 >= t.h0);
            }
        }
    }
}

TEST_CASE("brute-force Ulrich test for line bundles") {
    RuledSurface s(0, 1);
    Polarization h(1, 2, s);
    CHECK(is_ulrich_line(1, h, {0, 2}));
    CHECK(is_ulrich_line(1, h, {1, 1}));
    CHECK_FALSE(is_ulrich_line(1, h, {0, 0}));
    // the failure above is h2(d - 2H) = h0(K - d + 2H) = h0((0,1)) = 2
    CHECK(cohomology(1, {-2, -4}).h2 == 2);
}

TEST_CASE("exhaustive search") {
    RuledSurface s(0, 1);
    SearchBox box{-2, 6, -10, 10};

    Polarization h1(1, 2, s);
    auto found = search_ulrich_lines(1, h1, box);
    REQUIRE(found.size() == 2);
    CHECK(found[0].same_class({0, 2}));
    CHECK(found[1].same_class({1, 1}));

    Polarization h2(2, 3, s);
    CHECK(search_ulrich_lines(1, h2, box).empty());

    SearchBox empty{3, 1, 0, 5};
    CHECK(empty.empty());
    CHECK(search_ulrich_lines(1, h1, empty).empty());
}

TEST_CASE("default search box") {
    RuledSurface s(0, 2);
    Polarization h(1, 3, s);
    SearchBox box = SearchBox::default_for(h);
    CHECK(box.a_min == -2);
    CHECK(box.a_max == 6);
    CHECK(box.b_min == -12);
    CHECK(box.b_max == 12);
}
