#include "generators.hpp"

#include "mop/complex_gamma.hpp"
#include "mop/contour.hpp"
#include "mop/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <doctest.h>

#include <cmath>

using namespace mop;

namespace {

double deviation(const IntegrandSpec& s, Orientation o, int nodes, std::complex<double>* value = nullptr) {
    const auto c = choose_contour(pole_sets(s), o, nodes);
    const auto q = contour_quadrature<double>(s, c);
    bool zero = false;
    const double ref = closed_form_value<double>(s, &zero);
    if (value) *value = q.value;
    return relative_deviation(q.value, ref, zero, q.scale);
}

IntegrandSpec spec(FamilyParams fp, MultiIndex n, long x, bool type2, std::optional<std::size_t> i = std::nullopt) {
    return IntegrandSpec{std::move(fp), std::move(n), x, type2, i};
}

}  // namespace

TEST_CASE("log gamma") {
    const double pi = boost::math::constants::pi<double>();
    for (double x : {0.5, 1.0, 2.5, 7.25, 30.0})
        CHECK(log_gamma<double>({x, 0}).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(std::abs(gamma<double>({0.5, 0}) - std::sqrt(pi)) < 1e-13);
    for (std::complex<double> z : {std::complex<double>(0.3, 0.7), {-2.4, 1.1}, {0.5, -3}}) {
        const auto lhs = gamma(z) * gamma(1.0 - z);
        const auto rhs = pi / std::sin(pi * z);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
    CHECK_THROWS_AS(log_gamma<double>({-3, 0}), Error);
    // branch: Im log Gamma is continuous across the positive real axis
    CHECK(std::abs(log_gamma<double>({5, 1e-9}) - log_gamma<double>({5, -1e-9})) < 1e-8);
}

TEST_CASE("contour geometry") {
    ContourSpec c{Circle{{0, 0}, 2}, Orientation::Counterclockwise, 64};
    CHECK_NOTHROW(c.validate());
    CHECK(c.winding({1, 0}) == 1);
    CHECK(c.winding({3, 0}) == 0);
    CHECK(c.distance({3, 0}) == doctest::Approx(1));
    ContourSpec cw{Circle{{0, 0}, 2}, Orientation::Clockwise, 64};
    CHECK(cw.winding({1, 0}) == -1);
    ContourSpec r{Rectangle{{-1, -1}, {1, 1}}, Orientation::Counterclockwise, 64};
    CHECK(r.winding({0.5, 0.5}) == 1);
    CHECK(r.winding({2, 0}) == 0);
    CHECK_THROWS_AS((ContourSpec{Circle{{0, 0}, 0}, Orientation::Counterclockwise, 64}.validate()), Error);
    CHECK_THROWS_AS((ContourSpec{Circle{{0, 0}, 1}, Orientation::Counterclockwise, 100}.validate()), Error);
    CHECK_THROWS_AS((ContourSpec{Circle{{0, 0}, 1}, Orientation::Counterclockwise, 8}.validate()), Error);
}

TEST_CASE("contour validation errors") {
    PoleSets poles;
    poles.required = {0};
    poles.forbidden = {2};
    Contour through{ContourSpec{Circle{{1, 0}, 1}, Orientation::Counterclockwise, 64}};
    CHECK_THROWS_AS(validate_contour(through, poles), Error);
    try {
        validate_contour(through, poles);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleOnContour);
    }
    Contour wide{ContourSpec{Circle{{0, 0}, 3}, Orientation::Counterclockwise, 64}};
    try {
        validate_contour(wide, poles);
        FAIL("expected WrongEnclosure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongEnclosure);
    }
    Contour good{ContourSpec{Circle{{0, 0}, 1}, Orientation::Counterclockwise, 64}};
    CHECK_NOTHROW(validate_contour(good, poles));
}

TEST_CASE("Charlier contour values") {
    const auto ch = FamilyParams::make(CharlierParams{{2}});
    std::complex<double> v;
    CHECK(deviation(spec(ch, MultiIndex({1}), 0, false, 0), Orientation::Counterclockwise, 128, &v) < 1e-12);
    CHECK(v.real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(deviation(spec(ch, MultiIndex({1}), 1, true), Orientation::Counterclockwise, 256, &v) < 1e-10);
    CHECK(v.real() == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("Hahn linear form by contour") {
    const auto hh = FamilyParams::make(HahnParams{{Rational(1, 3), Rational(7, 5)}, Rational(-1, 4), 8});
    for (long x : {0L, 2L, 5L}) {
        CAPTURE(x);
        CHECK(deviation(spec(hh, MultiIndex({2, 1}), x, false), Orientation::Counterclockwise, 256) < 1e-8);
    }
}

TEST_CASE("the stated orientation negates the type I integrals") {
    const auto ch = FamilyParams::make(CharlierParams{{Rational(1, 2), Rational(5, 2)}});
    const auto s = spec(ch, MultiIndex({2, 1}), 1, false);
    REQUIRE(stated_orientation(Family::Charlier, false) != matching_orientation(Family::Charlier, false));
    const auto pos = contour_quadrature<double>(s, choose_contour(pole_sets(s), Orientation::Counterclockwise, 256));
    const auto neg = contour_quadrature<double>(s, choose_contour(pole_sets(s), Orientation::Clockwise, 256));
    CHECK(std::abs(pos.value + neg.value) < 1e-12 * pos.scale);
}

TEST_CASE("property: every representation matches the closed forms") {
    for (Family f : gen::families()) {
        CAPTURE(family_name(f));
        gen::Gen g(400 + static_cast<int>(f));
        for (int t = 0; t < 3; ++t) {
            const std::size_t p = static_cast<std::size_t>(g.integer(1, 2));
            const auto fp = g.params(f, p, 3);
            auto n = g.multi_index(p, 3);
            if (n.is_zero()) n = MultiIndex::unit(p, 0);
            const long x = g.integer(0, 4);
            CAPTURE(n.str());
            CAPTURE(x);
            CHECK(deviation(spec(fp, n, x, true), matching_orientation(f, true), 256) < 1e-8);
            CHECK(deviation(spec(fp, n, x, false), matching_orientation(f, false), 256) < 1e-8);
        }
    }
}

TEST_CASE("doubling the nodes leaves converged values unchanged") {
    const auto m2 = FamilyParams::make(MeixnerIIParams{{Rational(3, 2), Rational(7, 3)}, Rational(1, 3)});
    const auto s = spec(m2, MultiIndex({1, 2}), 2, true);
    const auto q = contour_quadrature<double>(s, choose_contour(pole_sets(s), matching_orientation(Family::MeixnerII, true), 256));
    CHECK(q.error_estimate < 1e-10 * std::max(1.0, std::abs(q.value)));
}

TEST_CASE("extended precision agrees with double") {
    const auto m1 = FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 4), Rational(2, 3)}});
    const auto s = spec(m1, MultiIndex({1, 2}), 3, true);
    const auto c = choose_contour(pole_sets(s), matching_orientation(Family::MeixnerI, true), 256);
    const auto d = contour_quadrature<double>(s, c);
    const auto e = contour_quadrature<long double>(s, c);
    CHECK(std::abs(d.value - std::complex<double>(e.value)) < 1e-9 * std::max(1.0, std::abs(d.value)));
}
