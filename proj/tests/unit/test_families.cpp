#include "generators.hpp"

#include "mop/error.hpp"
#include "mop/families.hpp"
#include "mop/hypergeometric.hpp"
#include "mop/oracle.hpp"

#include <doctest.h>

using namespace mop;

namespace {

Polynomial poly(std::initializer_list<const char*> c) {
    std::vector<Rational> v;
    for (auto s : c) v.push_back(parse_rational(s));
    return Polynomial(v);
}

}  // namespace

TEST_CASE("weights") {
    const auto ch = FamilyParams::make(CharlierParams{{2}});
    CHECK(weight(ch, 0, 3) == Rational(4, 3));
    const auto kr = FamilyParams::make(KravchukParams{{Rational(1, 2)}, 2});
    CHECK(weight(kr, 0, 1) == Rational(1, 2));
    const auto hh = FamilyParams::make(HahnParams{{Rational(1, 3)}, Rational(2, 5), 4});
    CHECK(weight(hh, 0, 0) == pochhammer(Rational(7, 5), 4) / factorial(4));
    CHECK_THROWS_AS(weight(kr, 0, 3), Error);
}

TEST_CASE("mass tokens") {
    const auto kr = FamilyParams::make(KravchukParams{{Rational(1, 2)}, 2});
    auto m = weight_mass_token(kr, 0);
    CHECK(m.token.kind == PrefactorToken::Kind::One);
    CHECK(m.rational_factor == 1);
    const auto ch = FamilyParams::make(CharlierParams{{2}});
    CHECK(weight_mass_token(ch, 0).token.kind == PrefactorToken::Kind::ExpNeg);
    const auto hh = FamilyParams::make(HahnParams{{Rational(1, 2)}, Rational(1, 2), 1});
    CHECK(weight_mass_token(hh, 0).rational_factor == weight(hh, 0, 0) + weight(hh, 0, 1));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FamilyParams::make(CharlierParams{{2, 2}}), Error);
    CHECK_THROWS_AS(FamilyParams::make(CharlierParams{{-1}}), Error);
    CHECK_THROWS_AS(FamilyParams::make(MeixnerIIParams{{Rational(1, 2)}, Rational(3, 2)}), Error);
    CHECK_THROWS_AS(FamilyParams::make(MeixnerIIParams{{Rational(1, 2), Rational(3, 2)}, Rational(1, 3)}), Error);
    CHECK_THROWS_AS(FamilyParams::make(KravchukParams{{Rational(1, 2), Rational(1, 2)}, 4}), Error);
    CHECK_THROWS_AS(FamilyParams::make(HahnParams{{Rational(1, 3), Rational(4, 3)}, Rational(1, 2), 5}), Error);
}

TEST_CASE("type II examples") {
    CHECK(type2(FamilyParams::make(CharlierParams{{2}}), MultiIndex({1})) == Polynomial({-2, 1}));
    CHECK(type2(FamilyParams::make(KravchukParams{{Rational(1, 2)}, 2}), MultiIndex({1})) == Polynomial({-1, 1}));
    for (Family f : gen::families()) {
        gen::Gen g(200 + static_cast<int>(f));
        const auto fp = g.params(f, 2, 3);
        CHECK(type2(fp, MultiIndex::zeros(2)) == Polynomial({1}));
    }
}

TEST_CASE("frozen type II values") {
    // cross-checked against an independent symbolic solve of the orthogonality conditions
    const auto hh = FamilyParams::make(HahnParams{{Rational(1, 3), Rational(7, 5)}, Rational(-1, 4), 8});
    CHECK(type2(hh, MultiIndex({2, 1})) == poly({"-147456/6283", "256790/6283", "-78945/6283", "1"}));
    CHECK(type2(hh, MultiIndex({2, 1}), Type2Representation::WeightedPfq) == type2(hh, MultiIndex({2, 1})));
    const auto m1 = FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 4), Rational(2, 3)}});
    CHECK(type2(m1, MultiIndex({1, 2})) == poly({"-35/2", "383/6", "-109/6", "1"}));
}

TEST_CASE("type I examples") {
    auto a = type1(FamilyParams::make(CharlierParams{{2}}), MultiIndex({1}), 0);
    CHECK(a.prefactor.kind == PrefactorToken::Kind::ExpNeg);
    CHECK(a.prefactor.base == 2);
    CHECK(a.rational_part == Polynomial({1}));

    auto m = type1(FamilyParams::make(MeixnerIParams{1, {Rational(1, 2)}}), MultiIndex({1}), 0);
    CHECK(m.prefactor.kind == PrefactorToken::Kind::PowOneMinusCi);
    CHECK(m.prefactor.exponent == 1);
    CHECK(m.rational_part == Polynomial({1}));

    const auto kr = FamilyParams::make(KravchukParams{{Rational(1, 3), Rational(1, 2)}, 4});
    CHECK(type1(kr, MultiIndex({2, 1}), 0).rational_part == poly({"0", "-9/4"}));
    CHECK(type1(kr, MultiIndex({2, 1}), 1).rational_part == poly({"3"}));

    CHECK(type1(kr, MultiIndex({2, 0}), 1).rational_part.is_zero());
}

TEST_CASE("frozen type I values") {
    const auto ch = FamilyParams::make(CharlierParams{{Rational(1, 2), Rational(5, 2)}});
    CHECK(type1(ch, MultiIndex({2, 1}), 0).rational_part == poly({"1/4", "-1"}));
    CHECK(type1(ch, MultiIndex({2, 1}), 1).rational_part == poly({"1/4"}));
    const auto m2 = FamilyParams::make(MeixnerIIParams{{Rational(3, 2), Rational(7, 3)}, Rational(1, 3)});
    CHECK(type1(m2, MultiIndex({1, 2}), 0).rational_part == poly({"324/55"}));
    CHECK(type1(m2, MultiIndex({1, 2}), 1).rational_part == poly({"-414/55", "108/77"}));
}

TEST_CASE("Meixner I alternative type I form") {
    CHECK(type1_alt_equivalence(FamilyParams::make(MeixnerIParams{1, {Rational(1, 2)}}), MultiIndex({2}), 0));
    const auto m1 = FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 3), Rational(1, 2)}});
    CHECK(type1_alt_equivalence(m1, MultiIndex({2, 1}), 0));
    CHECK(type1_alt_equivalence(m1, MultiIndex({1, 1}), 1));
}

TEST_CASE("recurrence coefficient examples") {
    auto r = nnrc(FamilyParams::make(CharlierParams{{2}}), MultiIndex({3}), Permutation::identity(1));
    CHECK(r.b0 == std::vector<Rational>{5});
    CHECK(r.bj == std::vector<Rational>{6});

    auto c2 = nnrc(FamilyParams::make(CharlierParams{{1, 3}}), MultiIndex({1, 1}), Permutation::identity(2));
    CHECK(c2.bj[0] == 4);
    CHECK(c2.bj[1] == 6);

    auto k = nnrc(FamilyParams::make(KravchukParams{{Rational(1, 2)}, 3}), MultiIndex({1}), Permutation::identity(1));
    CHECK(k.b0[0] == Rational(3, 2));
    CHECK(k.bj[0] == Rational(3, 4));

    auto k2 = nnrc(FamilyParams::make(KravchukParams{{Rational(1, 3), Rational(1, 2)}, 6}), MultiIndex({2, 1}),
                   Permutation::identity(2));
    CHECK(k2.b0 == std::vector<Rational>{Rational(17, 6), Rational(10, 3)});
    CHECK(k2.bj == std::vector<Rational>{Rational(25, 9), Rational(5, 6)});
}

TEST_CASE("linear form is exact on finite supports") {
    auto L = linear_form(FamilyParams::make(KravchukParams{{Rational(1, 3)}, 5}), MultiIndex({2}), 2);
    CHECK(L.exact);
    CHECK(L.exact_value == Rational(8, 81));
}

TEST_CASE("Charlier linear form sums to zero against low powers") {
    // sum_x x^j A(x) w(x) = 0 for j < |n| - 1; the tail beyond X is negligible for X = 60
    const auto fp = FamilyParams::make(CharlierParams{{2}});
    const MultiIndex n({3});
    for (int j = 0; j < 2; ++j) {
        long double s = 0;
        for (long x = 0; x <= 60; ++x) s += std::pow(static_cast<long double>(x), j) * linear_form(fp, n, x).value;
        CHECK(std::fabs(static_cast<double>(s)) < 1e-12);
    }
    long double s = 0;
    for (long x = 0; x <= 60; ++x) s += x * x * linear_form(fp, n, x).value;
    CHECK(static_cast<double>(s) == doctest::Approx(1.0).epsilon(1e-12));
}
