#include <doctest.h>

#include <random>

#include "ulrich/classify.hpp"

using namespace ulrich;

TEST_CASE("ulrich_pair is an involution matching K + 3H - d") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<Int> coef(-12, 12);
    for (int trial = 0; trial < 200; ++trial) {
        RuledSurface s(rng() % 4, 1 + rng() % 3);
        Int alpha = 1 + rng() % 3;
        Polarization hh(alpha, alpha * s.invariant() + 1 + rng() % 5, s);
        DivisorClass d{coef(rng), coef(rng), TwistLabel::generator("L1")};
        DivisorClass p = ulrich_pair(d, hh, s);
        CHECK(ulrich_pair(p, hh, s) == d);
        CHECK((d + p).same_class(canonical_class(s) + 3 * hh.cls()));
        CHECK(d.twist + p.twist == s.k_twist());
    }
}

TEST_CASE("ulrich_pair on F_1") {
    RuledSurface s(0, 1);
    Polarization h(1, 2, s);
    CHECK(ulrich_pair({0, 2}, h, s).same_class({1, 1}));
}

TEST_CASE("pair of L1 is the theorem's L2") {
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 1; e <= 3; ++e)
            for (Int beta = e + 1; beta <= e + 4; ++beta) {
                RuledSurface s(g, e);
                Polarization h(1, beta, s);
                DivisorClass l1{0, 2 * beta + g - 1 - e};
                CHECK(ulrich_pair(l1, h, s).same_class({1, beta + g - 1}));
            }
}

TEST_CASE("numeric Ulrich condition") {
    RuledSurface f1(0, 1);
    Polarization h(1, 2, f1);
    CHECK_FALSE(numeric_ulrich_line({0, 0}, h, f1));
    CHECK(euler_char_line(f1, DivisorClass{0, 0} - h.cls()) == 0);
    CHECK(euler_char_line(f1, DivisorClass{0, 0} - 2 * h.cls()) == 2);

    // both theorem classes are numeric candidates on any alpha=1 grid point
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 1; e <= 3; ++e)
            for (Int beta = e + 1; beta <= e + 4; ++beta) {
                RuledSurface s(g, e);
                Polarization hh(1, beta, s);
                CHECK(numeric_ulrich_line({0, 2 * beta + g - 1 - e}, hh, s));
                CHECK(numeric_ulrich_line({1, beta + g - 1}, hh, s));
            }
}

TEST_CASE("chi factorization solution lines") {
    // chi(aC0 + bF) = 0 iff a = -1 or 2b = 2(g-1) + ae
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 1; e <= 3; ++e) {
            RuledSurface s(g, e);
            for (Int a = -5; a <= 5; ++a)
                for (Int b = -8; b <= 8; ++b) {
                    bool zero = euler_char_line(s, {a, b}) == 0;
                    bool on_lines = (a == -1) || (2 * b == 2 * (g - 1) + a * e);
                    CHECK(zero == on_lines);
                }
        }
}

TEST_CASE("classification") {
    RuledSurface f1(0, 1);
    Classification c = classify_line_bundles(f1, Polarization(1, 2, f1));
    REQUIRE_FALSE(c.empty());
    CHECK(c.pair->first.same_class({0, 2}));
    CHECK(c.pair->second.same_class({1, 1}));

    RuledSurface s21(2, 1);
    Classification c2 = classify_line_bundles(s21, Polarization(1, 5, s21));
    REQUIRE_FALSE(c2.empty());
    CHECK(c2.pair->first.same_class({0, 10}));
    CHECK(c2.pair->second.same_class({1, 6}));

    CHECK(classify_line_bundles(f1, Polarization(3, 7, f1)).empty());
    CHECK(classify_line_bundles(s21, Polarization(2, 9, s21)).empty());
}

TEST_CASE("classification invariants over a grid") {
    for (Int g = 0; g <= 3; ++g)
        for (Int e = 1; e <= 3; ++e)
            for (Int beta = e + 1; beta <= e + 5; ++beta) {
                RuledSurface s(g, e);
                Polarization h(1, beta, s);
                Classification c = classify_line_bundles(s, h);
                REQUIRE_FALSE(c.empty());
                const auto& [l1, l2] = *c.pair;
                // pair-sum and formal twist relation
                CHECK((l1 + l2).same_class(canonical_class(s) + 3 * h.cls()));
                CHECK(l1.twist + l2.twist == s.k_twist());
                CHECK(l1.twist.is_general());
                CHECK(l2.twist.is_general());
                // degree invariant: H.Li = H.(K+3H)/2
                Int half_deg = exact_halve(
                    intersect(h.cls(), canonical_class(s) + 3 * h.cls(), s));
                CHECK(intersect(h.cls(), l1, s) == half_deg);
                CHECK(intersect(h.cls(), l2, s) == half_deg);
            }
}

TEST_CASE("reconciliation with the oracle") {
    RuledSurface f1(0, 1);
    RuledSurface f2(0, 2);
    Polarization h12(1, 2, f1);
    Polarization h14(1, 4, f2);
    Polarization h23(2, 3, f1);
    CHECK(reconcile_with_oracle(1, h12, SearchBox::default_for(h12)));
    CHECK(reconcile_with_oracle(2, h14, SearchBox::default_for(h14)));
    CHECK(reconcile_with_oracle(1, h23, SearchBox::default_for(h23)));
}
