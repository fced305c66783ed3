#include "mop/analytic_sweep.hpp"
#include "mop/asymptotics.hpp"
#include "mop/error.hpp"
#include "mop/limits.hpp"
#include "mop/moment_check.hpp"

#include <doctest.h>

#include <cmath>

using namespace mop;

TEST_CASE("log-log fit") {
    ConvergenceReport r;
    for (double L : {1e2, 1e3, 1e4, 1e5}) r.points.push_back({L, Real(1) + 3 / Real(L), Real(1), 3 / Real(L)});
    fit_convergence(r);
    CHECK(r.slope == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(r.monotone);
    CHECK(r.verdict == Verdict::Pass);

    ConvergenceReport sq = r;
    for (auto& p : sq.points) p.error = 1 / (Real(p.limit_variable) * p.limit_variable);
    fit_convergence(sq);
    CHECK(sq.slope == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(sq.verdict == Verdict::Fail);
    fit_convergence(sq, -std::numeric_limits<double>::infinity(), -0.7);
    CHECK(sq.verdict == Verdict::Pass);

    ConvergenceReport flat = r;
    for (auto& p : flat.points) p.error = Real("1e-3");
    fit_convergence(flat);
    CHECK(flat.verdict == Verdict::Fail);

    ConvergenceReport zero = r;
    for (auto& p : zero.points) p.error = 0;
    fit_convergence(zero);
    CHECK(zero.verdict == Verdict::Exact);
}

TEST_CASE("schedule validation") {
    auto s = default_limit_schedule(LimitEdge::KravchukToCharlier);
    CHECK_NOTHROW(s.validate());
    s.values = {1e2, 1e3, 1e4};
    CHECK_THROWS_AS(s.validate(), Error);
    s.values = {1e2, 2e2, 3e2, 4e2};
    CHECK_THROWS_AS(s.validate(), Error);
    CHECK(default_schedule(LimitEdge::KravchukToHermite).front() == 200);
    CHECK_THROWS_AS(parse_edge("hahn->hermite"), Error);
    CHECK(parse_edge(edge_name(LimitEdge::MeixnerIToLaguerreII)) == LimitEdge::MeixnerIToLaguerreII);
}

TEST_CASE("Kravchuk to Charlier recurrence") {
    // pi_i = a_i / N; b0 of Charlier a = 5 at n = 1 is n + a = 6
    LimitSchedule s = default_limit_schedule(LimitEdge::KravchukToCharlier);
    s.target = FamilyParams::make(CharlierParams{{5}});
    s.probe_n = {MultiIndex({1})};
    s.perms = {Permutation::identity(1)};
    RecurrenceProbe probe{MultiIndex({1}), Permutation::identity(1), true, 1};
    const Real v = scaled_recurrence(LimitEdge::KravchukToCharlier, s.target, probe, 1e5);
    CHECK(abs(v - 6) < Real("1e-3"));
    CHECK(abs(v - 6) > 0);
}

TEST_CASE("every limit edge converges") {
    for (LimitEdge e : all_edges()) {
        CAPTURE(edge_name(e));
        for (const auto& r : limit_edge(default_limit_schedule(e))) {
            CAPTURE(r.quantity);
            CAPTURE(r.probe);
            CAPTURE(r.slope);
            CHECK(r.verdict != Verdict::Fail);
        }
    }
}

TEST_CASE("the three Hermite routes agree") {
    const auto t = std::get<HermiteParams>(default_limit_schedule(LimitEdge::CharlierToHermite).target);
    const auto h = hermite_route_agreement(t, {MultiIndex({1, 0}), MultiIndex({1, 1})},
                                           {Permutation::identity(2), Permutation({2, 1})}, 1e5);
    REQUIRE_FALSE(h.empty());
    for (const auto& a : h) {
        CAPTURE(a.probe);
        CHECK(a.pass);
    }
}

TEST_CASE("continuous weights") {
    CHECK(abs(continuous_weight(HermiteParams{{0}}, 0, Real(1)) - exp(Real(-1))) < Real("1e-45"));
    CHECK(abs(continuous_weight(LaguerreIParams{{Rational(1, 2)}}, 0, Real(4)) - 2 * exp(Real(-4))) < Real("1e-45"));
    CHECK(abs(continuous_weight(JacobiPineiroParams{{1}, 1}, 0, Real("0.5")) - Real("0.25")) < Real("1e-45"));
}

TEST_CASE("gamma asymptotics") {
    const auto all = standard_asymptotic_checks();
    CHECK(all.size() >= 5);
    for (const auto& r : all) {
        CAPTURE(r.probe);
        CHECK(r.verdict != Verdict::Fail);
    }
    CHECK(functional_equation_check({1e2, 1e3, 1e4, 1e5}).verdict == Verdict::Exact);
    const auto s = stirling_ratio_check(Real(1), Real("0.5"), Real(0), {1e2, 1e3, 1e4, 1e5});
    CHECK(s.slope == doctest::Approx(-1.0).epsilon(0.05));
}

TEST_CASE("moment closed forms against brute-force sums") {
    for (const auto& fp : {FamilyParams::make(MeixnerIIParams{{Rational(1, 2), Rational(5, 3)}, Rational(4, 7)}),
                           FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 4), Rational(2, 3)}}),
                           FamilyParams::make(CharlierParams{{Rational(1, 2), 7}}),
                           FamilyParams::make(KravchukParams{{Rational(1, 3)}, 6})}) {
        for (const auto& m : validate_moments(fp, 10)) {
            CAPTURE(m.j);
            CHECK(m.rel_error < Real("1e-20"));
        }
    }
}
