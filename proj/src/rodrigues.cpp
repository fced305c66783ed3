#include "mop/rodrigues.hpp"

#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"

namespace mop {

Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error(ErrorKind::SingularDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = polynomial_gcd(num, den), r;
    Polynomial::divmod(num, g, num_, r);
    Polynomial::divmod(den, g, den_, r);
    const Rational lc = den_.leading();
    num_ *= Rational(1) / lc;
    den_ *= Rational(1) / lc;
}

RationalFunction RationalFunction::derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

Rational RationalFunction::operator()(const Rational& v) const {
    const Rational d = den_(v);
    if (d == 0) throw Error(ErrorKind::SingularDenominator, "rational function evaluated at a pole");
    return num_(v) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}
RationalFunction operator*(const Rational& s, const RationalFunction& a) { return {s * a.num_, a.den_}; }

namespace {

Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }  // v - root

Polynomial ipow(const Polynomial& p, long e) {
    Polynomial r = Polynomial::constant(1);
    for (long k = 0; k < e; ++k) r *= p;
    return r;
}

// v^x / prod_{j != i} (v - z_j)^{n_j}
RationalFunction kernel(long x, const std::vector<Rational>& z, const MultiIndex& n, std::size_t i) {
    Polynomial den = Polynomial::constant(1);
    for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den *= ipow(linear(z[j]), n[j]);
    return {Polynomial::monomial(static_cast<std::size_t>(x)), den};
}

}  // namespace

PrefactoredPolynomial rodrigues_type1(const FamilyParams& fp, const MultiIndex& n, std::size_t i, RodriguesSign sign) {
    if (n.size() != fp.p() || i >= fp.p()) throw Error(ErrorKind::InvalidArgument, "component or multi-index length mismatch");
    if (n[i] < 1) throw Error(ErrorKind::EmptyComponent, "n_i = 0");
    const long ni = n[i], nt = n.total();
    const Rational sg = sign == RodriguesSign::Corrected ? 1 : -1;
    std::vector<Rational> xs, ys;
    PrefactorToken token;
    for (long x = 0; x < ni + 2; ++x) {
        Rational value;
        switch (fp.family()) {
        case Family::MeixnerI: {
            auto& m = fp.as<MeixnerIParams>();
            const Rational ci = m.c[i], gamma = nt + m.beta - 2;
            token = PrefactorToken::pow_one_minus_ci(static_cast<int>(i) + 1, 1 - ci, gamma);
            RationalFunction r = kernel(x, m.c, n, i);
            const RationalFunction one_minus = RationalFunction::polynomial(Polynomial({Rational(1), Rational(-1)}));
            // d/dc [R (1-c)^g] = (R' - g R / (1-c)) (1-c)^g
            for (long k = 0; k < ni - 1; ++k)
                r = r.derivative() - gamma * (r * RationalFunction(Polynomial::constant(1), one_minus.num()));
            Rational pre = 1;
            for (std::size_t j = 0; j < fp.p(); ++j) pre *= pow(1 - m.c[j], n[j]);
            pre /= factorial(ni - 1) * pochhammer(m.beta, nt - 1);
            value = sg * pre * r(ci) / pow(ci, x);
            break;
        }
        case Family::Charlier: {
            auto& c = fp.as<CharlierParams>();
            const Rational ai = c.a[i];
            token = PrefactorToken::exp_neg(static_cast<int>(i) + 1, ai);
            RationalFunction r = kernel(x, c.a, n, i);
            // d/da [R e^{-a}] = (R' - R) e^{-a}
            for (long k = 0; k < ni - 1; ++k) r = r.derivative() - r;
            value = sg * r(ai) / (factorial(ni - 1) * pow(ai, x));
            break;
        }
        case Family::Kravchuk: {
            auto& kp = fp.as<KravchukParams>();
            const long N = kp.N;
            std::vector<Rational> tau;
            for (auto& p : kp.pi) tau.push_back(p / (1 - p));
            token = PrefactorToken::one();
            RationalFunction r = kernel(x, tau, n, i);
            const long e = nt - N - 2;
            const Polynomial one_plus({Rational(1), Rational(1)});
            r = r * (e >= 0 ? RationalFunction::polynomial(ipow(one_plus, e))
                            : RationalFunction(Polynomial::constant(1), ipow(one_plus, -e)));
            for (long k = 0; k < ni - 1; ++k) r = r.derivative();
            Rational pre = (nt - 1) % 2 == 0 ? 1 : -1;
            Rational den = pochhammer(Rational(-N), nt - 1) * factorial(ni - 1);
            for (std::size_t j = 0; j < fp.p(); ++j) den *= pow(1 - kp.pi[j], n[j]);
            if (den == 0) throw Error(ErrorKind::SingularDenominator, "(-N)_{|n|-1} = 0");
            const Rational pi = kp.pi[i];
            value = sg * pre / den * r(tau[i]) / (pow(pi, x) * pow(1 - pi, N - x));
            break;
        }
        default:
            throw Error(ErrorKind::UnsupportedRepresentation,
                        std::string("no Rodrigues-type formula for ") + family_name(fp.family()));
        }
        xs.push_back(x);
        ys.push_back(value);
    }
    return {token, interpolate(xs, ys)};
}

bool rodrigues_matches_closed_form(const FamilyParams& fp, const MultiIndex& n, std::size_t i, RodriguesSign sign) {
    const auto rod = rodrigues_type1(fp, n, i, sign);
    const auto closed = type1(fp, n, i);
    return rod.rational_part * token_ratio(rod.prefactor, closed.prefactor) == closed.rational_part;
}

}  // namespace mop
