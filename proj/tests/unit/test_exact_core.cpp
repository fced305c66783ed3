#include "generators.hpp"

#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"
#include "mop/identities.hpp"
#include "mop/sweep.hpp"

#include <doctest.h>

using namespace mop;

TEST_CASE("pochhammer values") {
    CHECK(pochhammer(Rational(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(3), 2) == 12);
    CHECK(pochhammer(Rational(-3), 5) == 0);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer recurrence (x)_{n+1} = (x)_n (x+n)") {
    gen::Gen g(101);
    for (int t = 0; t < 200; ++t) {
        const Rational x = g.fraction(-6, 6);
        const long n = g.integer(0, 8);
        CHECK(pochhammer(x, n + 1) == pochhammer(x, n) * (x + n));
    }
}

TEST_CASE("terminating pFq") {
    CHECK(eval_pfq_terminating({0, 5}, {7}, Rational(3, 4)) == 1);
    CHECK(eval_pfq_terminating({-2, 1}, {3}, 1) == Rational(1, 2));
    CHECK(eval_pfq_terminating({-1, 1, 2}, {4, -1}, 1) == Rational(3, 2));
}

TEST_CASE("non-terminating series and lower poles are rejected") {
    CHECK_THROWS_AS(eval_pfq_terminating({Rational(1, 2), 1}, {3}, 1), Error);
    try {
        eval_pfq_terminating({-3, 1}, {-1}, 1);
        FAIL("expected LowerParamPole");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LowerParamPole);
    }
}

TEST_CASE("Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n") {
    gen::Gen g(102);
    for (int t = 0; t < 200; ++t) {
        const long n = g.integer(0, 7);
        const Rational b = g.fraction(-5, 5), c = g.fraction(-5, 5);
        CHECK(eval_pfq_terminating({Rational(-n), b}, {c}, 1) == pochhammer(c - b, n) / pochhammer(c, n));
    }
}

TEST_CASE("Kampe de Feriet with one variable reduces to pFq") {
    HypSeriesSpec zero{{}, {}, {{-1}, {-2}}, {{3}, {4}}, {0, 0}};
    CHECK(eval_kampe_de_feriet(zero) == 1);
    HypSeriesSpec one{{}, {}, {{-2, 1}}, {{3}}, {1}};
    CHECK(eval_kampe_de_feriet(one) == Rational(1, 2));
}

TEST_CASE("shifted factorial bases expand to monomials") {
    CHECK(shifted_factorial_polynomial(ShiftedFactorial::neg_x(1)) == Polynomial({0, -1}));
    CHECK(shifted_factorial_polynomial(ShiftedFactorial::neg_x(2)) == Polynomial({0, -1, 1}));
    CHECK(shifted_factorial_polynomial(ShiftedFactorial::x_plus(Rational(1, 2), 2)) ==
          Polynomial({Rational(3, 4), 2, 1}));
}

TEST_CASE("expanded basis agrees with pointwise evaluation") {
    gen::Gen g(103);
    for (int t = 0; t < 100; ++t) {
        std::vector<BasisTerm> terms;
        for (long k = 0; k < 5; ++k) terms.push_back({g.fraction(-3, 3), ShiftedFactorial::neg_x(k)});
        const Polynomial P = expand_in_monomials(terms);
        const Rational x = g.integer(0, 9);
        Rational direct = 0;
        for (auto& b : terms) direct += b.coeff * pochhammer(-x, b.basis.order);
        CHECK(P(x) == direct);
    }
}

TEST_CASE("identity examples") {
    IdentityParams cv;
    cv.x = 1;
    cv.y = 2;
    cv.n = 2;
    auto r = verify_identity(IdentityKind::ChuVandermonde, cv);
    CHECK(r.equal);
    CHECK(r.lhs == 12);

    IdentityParams ps;
    ps.a = 1;
    ps.b = 2;
    ps.c = 4;
    ps.k = 1;
    ps.n = 2;
    CHECK(verify_identity(IdentityKind::PfaffSaalschutz, ps).equal);

    IdentityParams l3;
    l3.alpha = {Rational(5, 2)};
    l3.nvec = {3};
    l3.x = Rational(1, 3);
    CHECK(verify_identity(IdentityKind::Lemma3, l3).equal);
}

TEST_CASE("identity suites hold on random draws") {
    for (auto k : {IdentityKind::ChuVandermonde, IdentityKind::Gauss, IdentityKind::PfaffSaalschutz, IdentityKind::Lemma1,
                   IdentityKind::Lemma2, IdentityKind::Lemma3}) {
        CAPTURE(identity_name(k));
        auto res = verify_identity_sweep(k, 60, 5);
        CHECK(res.failed == 0);
        CHECK(res.passed == 60);
    }
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial p({1, 2, 3}), q({-1, 1});
    CHECK((p * q) == Polynomial({-1, -1, -1, 3}));
    Polynomial quo, rem;
    Polynomial::divmod(p * q + Polynomial({5}), q, quo, rem);
    CHECK(quo == p);
    CHECK(rem == Polynomial({5}));
    CHECK(Polynomial().degree().is_neg_infinity());
    CHECK(Polynomial({0, 0}).is_zero());
    CHECK(p.derivative() == Polynomial({2, 6}));
}

TEST_CASE("interpolation reproduces random polynomials") {
    gen::Gen g(104);
    for (int t = 0; t < 50; ++t) {
        std::vector<Rational> c;
        const long d = g.integer(0, 5);
        for (long k = 0; k <= d; ++k) c.push_back(g.fraction(-4, 4));
        const Polynomial P(c);
        std::vector<Rational> xs, ys;
        for (long k = 0; k <= d; ++k) {
            xs.push_back(Rational(k) - Rational(1, 2));
            ys.push_back(P(xs.back()));
        }
        CHECK(interpolate(xs, ys) == P);
    }
}

TEST_CASE("step vectors and index sets") {
    const Permutation pi({4, 2, 1, 3});
    CHECK(step_sets(pi, 1).S == std::vector<int>{1, 2, 3, 4});
    CHECK(step_sets(pi, 3).S == std::vector<int>{1, 3});
    CHECK(step_sets(pi, 0).s == MultiIndex::zeros(4));
    CHECK(step_sets(pi, 4).s == MultiIndex({1, 1, 1, 1}));
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2/1");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}
