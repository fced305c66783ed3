#include "generators.hpp"

#include "mop/error.hpp"
#include "mop/rodrigues.hpp"

#include <doctest.h>

using namespace mop;

TEST_CASE("rational functions") {
    const RationalFunction f(Polynomial({1}), Polynomial({1, 1}));  // 1/(1+x)
    CHECK(f(Rational(1)) == Rational(1, 2));
    const auto d = f.derivative();
    CHECK(d(Rational(1)) == Rational(-1, 4));
    CHECK_THROWS_AS(f(Rational(-1)), Error);
    const RationalFunction g(Polynomial({-1, 0, 1}), Polynomial({-1, 1}));  // (x^2-1)/(x-1)
    CHECK(g.den() == Polynomial({1}));
    CHECK(g.num() == Polynomial({1, 1}));
    CHECK((f * g)(Rational(3)) == 1);
    CHECK(polynomial_gcd(Polynomial({-1, 0, 1}), Polynomial({1, 1})) == Polynomial({1, 1}));
}

TEST_CASE("Charlier Rodrigues examples") {
    const auto ch = FamilyParams::make(CharlierParams{{2}});
    for (long n = 1; n <= 3; ++n) {
        const auto r = rodrigues_type1(ch, MultiIndex({n}), 0);
        const auto c = type1(ch, MultiIndex({n}), 0);
        CHECK(r.rational_part == c.rational_part);
        CHECK(r.prefactor.str() == c.prefactor.str());
    }
}

TEST_CASE("Kravchuk Rodrigues example") {
    const auto kr = FamilyParams::make(KravchukParams{{Rational(1, 3), Rational(1, 2)}, 4});
    CHECK(rodrigues_matches_closed_form(kr, MultiIndex({2, 1}), 0));
    CHECK(rodrigues_type1(kr, MultiIndex({2, 1}), 0).rational_part == Polynomial({0, Rational(-9, 4)}));
}

TEST_CASE("the printed leading sign gives the negative") {
    const auto m1 = FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 4), Rational(2, 3)}});
    for (std::size_t i = 0; i < 2; ++i) {
        const auto a = rodrigues_type1(m1, MultiIndex({1, 2}), i, RodriguesSign::Corrected);
        const auto b = rodrigues_type1(m1, MultiIndex({1, 2}), i, RodriguesSign::Printed);
        CHECK(b.rational_part == -a.rational_part);
        CHECK(rodrigues_matches_closed_form(m1, MultiIndex({1, 2}), i));
        CHECK_FALSE(rodrigues_matches_closed_form(m1, MultiIndex({1, 2}), i, RodriguesSign::Printed));
    }
}

TEST_CASE("property: Rodrigues equals the closed type I") {
    for (Family f : {Family::MeixnerI, Family::Kravchuk, Family::Charlier}) {
        CAPTURE(family_name(f));
        gen::Gen g(500 + static_cast<int>(f));
        for (int t = 0; t < 6; ++t) {
            const std::size_t p = static_cast<std::size_t>(g.integer(1, 3));
            const auto fp = g.params(f, p, 4);
            const auto n = g.multi_index(p, 4);
            CAPTURE(n.str());
            for (std::size_t i = 0; i < p; ++i)
                if (n[i] > 0) CHECK(rodrigues_matches_closed_form(fp, n, i));
        }
    }
}

TEST_CASE("Rodrigues is not available for the other families") {
    const auto hh = FamilyParams::make(HahnParams{{Rational(1, 3)}, Rational(2, 5), 4});
    CHECK_THROWS_AS(rodrigues_type1(hh, MultiIndex({1}), 0), Error);
}
