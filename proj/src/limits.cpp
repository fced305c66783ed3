#include "mop/limits.hpp"

#include "mop/error.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mop {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

Real lgam(const Real& z) { return boost::math::lgamma(z); }
Real pi_real() { return boost::math::constants::pi<Real>(); }

Rational exact(double L) { return Rational(L); }

long as_long(double L) {
    const long v = std::lround(L);
    if (static_cast<double>(v) != L) throw Error(ErrorKind::InvalidArgument, "schedule value must be an integer for this edge");
    return v;
}

Rational sgn(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

const FamilyParams& discrete_target(const LimitTarget& t) {
    if (auto* f = std::get_if<FamilyParams>(&t)) return *f;
    throw Error(ErrorKind::InvalidArgument, "edge needs a discrete target family");
}

template <class P> const P& continuous_target(const LimitTarget& t) {
    if (auto* p = std::get_if<P>(&t)) return *p;
    throw Error(ErrorKind::InvalidArgument, "edge target does not match the edge");
}

// Hermite edges. Charlier and Laguerre II run on sigma = sqrt(2 beta), beta = sigma^2 / 2; Kravchuk
// runs on N with sigma = sqrt(N/2), which must be rational. The probe sits at N/2 + x sigma or
// beta + x sigma.
Rational hermite_beta(const Rational& sigma) { return sigma * sigma / 2; }

Rational kravchuk_sigma(const Rational& N) {
    const Rational h = N / 2;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), h.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), h.get_den().get_mpz_t());
    if (rn * rn != h.get_num() || rd * rd != h.get_den())
        throw Error(ErrorKind::InvalidArgument, "Kravchuk to Hermite needs N/2 to be a rational square, got N = " + to_string(N));
    return Rational(rn, rd);
}

// Ratio between the two points of the Richardson step; Kravchuk to Hermite needs sigma * 10.
double richardson_ratio(LimitEdge e) { return e == LimitEdge::KravchukToHermite ? 100 : 10; }

// ---- source parameters -------------------------------------------------------------------------

FamilyParams source_params(LimitEdge e, const LimitTarget& t, const Rational& L) {
    switch (e) {
    case LimitEdge::HahnToMeixnerII: {
        auto& m = discrete_target(t).as<MeixnerIIParams>();
        HahnParams h;
        for (auto& b : m.beta) h.alpha.push_back(b - 1);
        h.N = as_long(L.get_d());
        h.beta = (1 - m.c) * L / m.c;
        return FamilyParams::unchecked(h);
    }
    case LimitEdge::HahnToMeixnerI: {
        auto& m = discrete_target(t).as<MeixnerIParams>();
        HahnParams h;
        for (auto& c : m.c) h.alpha.push_back((1 - c) * L / c);
        h.beta = m.beta - 1;
        h.N = as_long(L.get_d());
        return FamilyParams::unchecked(h);
    }
    case LimitEdge::HahnToKravchuk: {
        auto& k = discrete_target(t).as<KravchukParams>();
        HahnParams h;
        for (auto& p : k.pi) h.alpha.push_back(p / (1 - p) * L);
        h.beta = L;
        h.N = k.N;
        return FamilyParams::unchecked(h);
    }
    case LimitEdge::MeixnerIIToCharlier: {
        auto& c = discrete_target(t).as<CharlierParams>();
        const Rational cc = 1 / L;
        MeixnerIIParams m;
        for (auto& a : c.a) m.beta.push_back(a / cc);
        m.c = cc;
        return FamilyParams::unchecked(m);
    }
    case LimitEdge::MeixnerIToCharlier: {
        auto& c = discrete_target(t).as<CharlierParams>();
        MeixnerIParams m;
        m.beta = L;
        for (auto& a : c.a) m.c.push_back(a / L);
        return FamilyParams::unchecked(m);
    }
    case LimitEdge::KravchukToCharlier: {
        auto& c = discrete_target(t).as<CharlierParams>();
        KravchukParams k;
        k.N = as_long(L.get_d());
        for (auto& a : c.a) k.pi.push_back(a / L);
        return FamilyParams::unchecked(k);
    }
    case LimitEdge::HahnToJacobiPineiro: {
        auto& j = continuous_target<JacobiPineiroParams>(t);
        return FamilyParams::unchecked(HahnParams{j.alpha, j.beta, as_long(L.get_d())});
    }
    case LimitEdge::MeixnerIIToLaguerreI: {
        auto& l = continuous_target<LaguerreIParams>(t);
        MeixnerIIParams m;
        for (auto& a : l.alpha) m.beta.push_back(a + 1);
        m.c = 1 - 1 / L;
        return FamilyParams::unchecked(m);
    }
    case LimitEdge::MeixnerIToLaguerreII: {
        auto& l = continuous_target<LaguerreIIParams>(t);
        MeixnerIParams m;
        m.beta = l.alpha0 + 1;
        for (auto& c : l.c) m.c.push_back(L / (L + c));
        return FamilyParams::unchecked(m);
    }
    case LimitEdge::KravchukToHermite: {
        auto& h = continuous_target<HermiteParams>(t);
        KravchukParams k;
        const Rational sigma = kravchuk_sigma(L);
        k.N = as_long(L.get_d());
        for (auto& c : h.c) k.pi.push_back(Rational(1, 2) + c / (4 * sigma));
        return FamilyParams::unchecked(k);
    }
    case LimitEdge::CharlierToHermite: {
        auto& h = continuous_target<HermiteParams>(t);
        CharlierParams ch;
        for (auto& c : h.c) ch.a.push_back(hermite_beta(L) + c * L / 2);
        return FamilyParams::unchecked(ch);
    }
    case LimitEdge::LaguerreIIToHermite: break;
    }
    throw Error(ErrorKind::InvalidArgument, std::string("no discrete source family for ") + edge_name(e));
}

// Point in the source variable corresponding to the target probe x.
Rational source_point(LimitEdge e, const Rational& x, const Rational& L, const FamilyParams* src) {
    switch (e) {
    case LimitEdge::HahnToMeixnerI: return src->support_size_N() - x;
    case LimitEdge::HahnToJacobiPineiro: return L * x;
    case LimitEdge::MeixnerIIToLaguerreI: return L * x;
    case LimitEdge::MeixnerIToLaguerreII: return L * x;
    case LimitEdge::KravchukToHermite: return L / 2 + x * kravchuk_sigma(L);
    case LimitEdge::CharlierToHermite:
    case LimitEdge::LaguerreIIToHermite: return hermite_beta(L) + x * L;
    default: return x;
    }
}

// ---- Laguerre II values through the Meixner I limit ----------------------------------------------

// Exact one-level Richardson of tau^{-k} * f(M1 params at tau), tau -> infinity.
template <class F> Rational laguerre2_via_meixner1(const Rational& alpha0, const std::vector<Rational>& c, const Rational& scale,
                                                    long k, const F& f) {
    auto at = [&](const Rational& tau) -> Rational {
        MeixnerIParams m;
        m.beta = alpha0 + 1;
        for (auto& ci : c) m.c.push_back(tau / (tau + ci));
        return f(FamilyParams::unchecked(m), tau) / pow(tau, k);
    };
    const Rational s = abs(scale) + 1;
    const Rational tau = Rational(Integer(10)) * Rational(Integer("1000000000000000000000000000000")) * s * s;
    return (10 * at(10 * tau) - at(tau)) / 9;
}

Rational l2_recurrence(const Rational& alpha0, const std::vector<Rational>& c, const RecurrenceProbe& pr, const Rational& scale) {
    const long j = pr.b0 ? 0 : pr.index;
    return laguerre2_via_meixner1(alpha0, c, scale, j + 1, [&](const FamilyParams& fp, const Rational&) -> Rational {
        auto rc = nnrc(fp, pr.n, pr.perm);
        return pr.b0 ? rc.b0[pr.index - 1] : rc.bj[pr.index - 1];
    });
}

Rational l2_type2(const Rational& alpha0, const std::vector<Rational>& c, const MultiIndex& n, const Rational& y) {
    return laguerre2_via_meixner1(alpha0, c, y, n.total(), [&](const FamilyParams& fp, const Rational& tau) -> Rational {
        return type2(fp, n)(tau * y);
    });
}

// ---- scaled quantities -----------------------------------------------------------------------------

Rational scaled_recurrence_exact(LimitEdge e, const LimitTarget& t, const RecurrenceProbe& pr, const Rational& L) {
    const long j = pr.b0 ? 0 : pr.index;
    if (e == LimitEdge::LaguerreIIToHermite) {
        auto& h = continuous_target<HermiteParams>(t);
        const Rational beta = hermite_beta(L);
        std::vector<Rational> c;
        for (auto& ci : h.c) c.push_back(1 - ci / L);
        Rational v = l2_recurrence(beta, c, pr, beta);
        if (j == 0) v -= beta;
        return v / pow(L, j + 1);
    }
    const FamilyParams src = source_params(e, t, L);
    auto rc = nnrc(src, pr.n, pr.perm);
    Rational v = pr.b0 ? rc.b0[pr.index - 1] : rc.bj[pr.index - 1];
    switch (e) {
    case LimitEdge::HahnToMeixnerI:
        if (j == 0) v -= src.support_size_N();
        return sgn(j + 1) * v;
    case LimitEdge::HahnToJacobiPineiro: return v / pow(L, j + 1);
    case LimitEdge::MeixnerIIToLaguerreI: return v / pow(L, j + 1);  // (1-c)^{j+1} with 1-c = 1/L
    case LimitEdge::MeixnerIToLaguerreII: return v / pow(L, j + 1);
    case LimitEdge::KravchukToHermite:
        if (j == 0) v -= L / 2;
        return v / pow(kravchuk_sigma(L), j + 1);
    case LimitEdge::CharlierToHermite:
        if (j == 0) v -= hermite_beta(L);
        return v / pow(L, j + 1);
    default: return v;
    }
}

Rational scaled_type2_exact(LimitEdge e, const LimitTarget& t, const MultiIndex& n, const Rational& x, const Rational& L) {
    const long nt = n.total();
    if (e == LimitEdge::LaguerreIIToHermite) {
        auto& h = continuous_target<HermiteParams>(t);
        const Rational beta = hermite_beta(L);
        std::vector<Rational> c;
        for (auto& ci : h.c) c.push_back(1 - ci / L);
        return l2_type2(beta, c, n, source_point(e, x, L, nullptr)) / pow(L, nt);
    }
    const FamilyParams src = source_params(e, t, L);
    const Rational v = type2(src, n)(source_point(e, x, L, &src));
    switch (e) {
    case LimitEdge::HahnToMeixnerI: return sgn(nt) * v;
    case LimitEdge::HahnToJacobiPineiro:
    case LimitEdge::MeixnerIIToLaguerreI:
    case LimitEdge::MeixnerIToLaguerreII:
    case LimitEdge::CharlierToHermite: return v / pow(L, nt);
    case LimitEdge::KravchukToHermite: return v / pow(kravchuk_sigma(L), nt);
    default: return v;
    }
}

Real log_hahn_weight(const Real& a, const Real& b, const Real& N, const Real& y) {
    return lgam(a + y + 1) - lgam(a + 1) - lgam(y + 1) + lgam(b + N - y + 1) - lgam(b + 1) - lgam(N - y + 1);
}

Real scaled_weight(LimitEdge e, const LimitTarget& t, std::size_t i, const Rational& xq, const Rational& Lq) {
    const Real L = to_real(Lq), x = to_real(xq);
    switch (e) {
    case LimitEdge::HahnToMeixnerII: {
        auto& m = discrete_target(t).as<MeixnerIIParams>();
        const Real c = to_real(m.c), bH = (1 - c) * L / c;
        const Real lw = log_hahn_weight(to_real(m.beta[i]) - 1, bH, L, x);
        return exp(lw + log(sqrt(2 * pi_real() * L)) + L * log(c) + (bH + Real(0.5)) * log(1 - c));
    }
    case LimitEdge::HahnToMeixnerI: {
        auto& m = discrete_target(t).as<MeixnerIParams>();
        const Real c = to_real(m.c[i]), a = (1 - c) * L / c;
        const Real lw = log_hahn_weight(a, to_real(m.beta) - 1, L, L - x);
        return exp(lw + log(sqrt(2 * pi_real() * L)) + L * log(c) + (a + Real(0.5)) * log(1 - c));
    }
    case LimitEdge::HahnToKravchuk: {
        auto& k = discrete_target(t).as<KravchukParams>();
        const FamilyParams src = source_params(e, t, Lq);
        const long xi = xq.get_num().get_si();
        return to_real(factorial(k.N) * pow(1 - k.pi[i], k.N) / pow(Lq, k.N) * weight(src, i, xi));
    }
    case LimitEdge::MeixnerIIToCharlier:
    case LimitEdge::MeixnerIToCharlier:
        return to_real(weight(source_params(e, t, Lq), i, xq.get_num().get_si()));
    case LimitEdge::KravchukToCharlier: {
        auto& c = discrete_target(t).as<CharlierParams>();
        const Real a = to_real(c.a[i]), p = a / L;
        return exp(a + lgam(L + 1) - lgam(x + 1) - lgam(L - x + 1) + x * log(p) + (L - x) * log(1 - p));
    }
    case LimitEdge::HahnToJacobiPineiro: {
        auto& j = continuous_target<JacobiPineiroParams>(t);
        const Real a = to_real(j.alpha[i]), b = to_real(j.beta), y = L * x;
        return exp(lgam(a + y + 1) - lgam(y + 1) + lgam(b + L - y + 1) - lgam(L - y + 1) - (a + b) * log(L));
    }
    case LimitEdge::MeixnerIIToLaguerreI: {
        auto& l = continuous_target<LaguerreIParams>(t);
        const Real a = to_real(l.alpha[i]), omc = 1 / L, c = 1 - omc, y = x * L;
        return exp(a * log(omc) + lgam(y + a + 1) - lgam(y + 1) + y * log(c));
    }
    case LimitEdge::MeixnerIToLaguerreII: {
        auto& l = continuous_target<LaguerreIIParams>(t);
        const Real a0 = to_real(l.alpha0), ci = to_real(l.c[i]), y = L * x;
        return exp(lgam(y + a0 + 1) - lgam(y + 1) - a0 * log(L) + y * log(L / (L + ci)));
    }
    case LimitEdge::KravchukToHermite: {
        auto& h = continuous_target<HermiteParams>(t);
        const Real c = to_real(h.c[i]), N = L, sigma = sqrt(N / 2), y = N / 2 + x * sigma,
                   p = Real(0.5) + c / (4 * sigma);
        return sqrt(pi_real() * N / 2) *
               exp(c * c / 4 + lgam(N + 1) - lgam(y + 1) - lgam(N - y + 1) + y * log(p) + (N - y) * log(1 - p));
    }
    case LimitEdge::CharlierToHermite: {
        auto& h = continuous_target<HermiteParams>(t);
        const Real c = to_real(h.c[i]), beta = L * L / 2, y = beta + x * L, a = beta + c * L / 2;
        return sqrt(2 * pi_real() * beta) * exp(-beta - c * L / 2 + c * c / 4 + y * log(a) - lgam(y + 1));
    }
    case LimitEdge::LaguerreIIToHermite: {
        auto& h = continuous_target<HermiteParams>(t);
        const Real c = to_real(h.c[i]), beta = L * L / 2, y = beta + x * L, cc = 1 - c / L;
        return exp(-beta * log(beta) + beta - c * L / 2 + beta * log(y) - cc * y);
    }
    }
    return 0;
}

Real target_weight(LimitEdge e, const LimitTarget& t, std::size_t i, const Rational& x) {
    if (is_discrete_edge(e)) return to_real(weight(discrete_target(t), i, x.get_num().get_si()));
    return std::visit(
        [&](const auto& p) -> Real {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, FamilyParams>)
                throw Error(ErrorKind::InvalidArgument, "continuous edge with a discrete target");
            else
                return continuous_weight(p, i, to_real(x));
        },
        t);
}

Rational target_recurrence(const FamilyParams& fp, const RecurrenceProbe& pr) {
    auto rc = nnrc(fp, pr.n, pr.perm);
    return pr.b0 ? rc.b0[pr.index - 1] : rc.bj[pr.index - 1];
}

std::string rational_probe(const Rational& x) { return to_string(x); }

std::string recurrence_label(const RecurrenceProbe& pr) {
    return "n=" + pr.n.str() + " perm=" + pr.perm.str() + (pr.b0 ? " b0(" : " b^") + std::to_string(pr.index) +
           (pr.b0 ? ")" : "");
}

Real rel_error(const Real& v, const Real& t) {
    const Real d = abs(v - t);
    return t == 0 ? d : d / abs(t);
}

}  // namespace

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Real continuous_weight(const JacobiPineiroParams& p, std::size_t i, const Real& x) {
    return exp(to_real(p.alpha.at(i)) * log(x) + to_real(p.beta) * log(1 - x));
}
Real continuous_weight(const LaguerreIParams& p, std::size_t i, const Real& x) {
    return exp(to_real(p.alpha.at(i)) * log(x) - x);
}
Real continuous_weight(const LaguerreIIParams& p, std::size_t i, const Real& x) {
    return exp(to_real(p.alpha0) * log(x) - to_real(p.c.at(i)) * x);
}
Real continuous_weight(const HermiteParams& p, std::size_t i, const Real& x) {
    return exp(-x * x + to_real(p.c.at(i)) * x);
}

const char* edge_name(LimitEdge e) {
    switch (e) {
    case LimitEdge::HahnToMeixnerII: return "hahn->meixner2";
    case LimitEdge::HahnToMeixnerI: return "hahn->meixner1";
    case LimitEdge::HahnToKravchuk: return "hahn->kravchuk";
    case LimitEdge::MeixnerIIToCharlier: return "meixner2->charlier";
    case LimitEdge::MeixnerIToCharlier: return "meixner1->charlier";
    case LimitEdge::KravchukToCharlier: return "kravchuk->charlier";
    case LimitEdge::HahnToJacobiPineiro: return "hahn->jacobi-pineiro";
    case LimitEdge::MeixnerIIToLaguerreI: return "meixner2->laguerre1";
    case LimitEdge::MeixnerIToLaguerreII: return "meixner1->laguerre2";
    case LimitEdge::KravchukToHermite: return "kravchuk->hermite";
    case LimitEdge::CharlierToHermite: return "charlier->hermite";
    case LimitEdge::LaguerreIIToHermite: return "laguerre2->hermite";
    }
    return "?";
}

std::vector<LimitEdge> all_edges() {
    return {LimitEdge::HahnToMeixnerII,     LimitEdge::HahnToMeixnerI,       LimitEdge::HahnToKravchuk,
            LimitEdge::MeixnerIIToCharlier, LimitEdge::MeixnerIToCharlier,   LimitEdge::KravchukToCharlier,
            LimitEdge::HahnToJacobiPineiro, LimitEdge::MeixnerIIToLaguerreI, LimitEdge::MeixnerIToLaguerreII,
            LimitEdge::KravchukToHermite,   LimitEdge::CharlierToHermite,    LimitEdge::LaguerreIIToHermite};
}

LimitEdge parse_edge(const std::string& s) {
    for (auto e : all_edges())
        if (s == edge_name(e)) return e;
    throw Error(ErrorKind::InvalidArgument, "unknown limit edge '" + s + "'");
}

bool is_discrete_edge(LimitEdge e) { return static_cast<int>(e) <= static_cast<int>(LimitEdge::KravchukToCharlier); }

const char* limit_variable_name(LimitEdge e) {
    switch (e) {
    case LimitEdge::HahnToMeixnerII:
    case LimitEdge::HahnToMeixnerI:
    case LimitEdge::KravchukToCharlier:
    case LimitEdge::HahnToJacobiPineiro: return "N";
    case LimitEdge::HahnToKravchuk:
    case LimitEdge::MeixnerIToLaguerreII: return "tau";
    case LimitEdge::MeixnerIIToCharlier: return "1/c";
    case LimitEdge::MeixnerIToCharlier: return "beta";
    case LimitEdge::MeixnerIIToLaguerreI: return "1/(1-c)";
    case LimitEdge::KravchukToHermite: return "N";
    case LimitEdge::CharlierToHermite:
    case LimitEdge::LaguerreIIToHermite: return "sqrt(2 beta)";
    }
    return "?";
}

std::size_t target_p(const LimitTarget& t) {
    return std::visit(
        [](const auto& p) -> std::size_t {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, FamilyParams>) return p.p();
            else if constexpr (std::is_same_v<P, JacobiPineiroParams> || std::is_same_v<P, LaguerreIParams>)
                return p.alpha.size();
            else return p.c.size();
        },
        t);
}

const char* quantity_name(LimitQuantity q) {
    switch (q) {
    case LimitQuantity::Weight: return "weight";
    case LimitQuantity::Type2Value: return "type2";
    case LimitQuantity::RecurrenceB0: return "b0";
    case LimitQuantity::RecurrenceBj: return "bj";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Exact: return "exact";
    case Verdict::Fail: return "fail";
    }
    return "?";
}

std::vector<double> default_schedule(LimitEdge e) {
    // N = 2 sigma^2 with sigma = 10, 32, 100, 317 keeps sqrt(N/2) rational
    if (e == LimitEdge::KravchukToHermite) return {200, 2048, 20000, 200978};
    return {1e2, 1e3, 1e4, 1e5};
}

void LimitSchedule::validate() const {
    if (values.size() < 4) throw Error(ErrorKind::InvalidArgument, "a schedule needs at least 4 points");
    for (std::size_t k = 1; k < values.size(); ++k)
        if (!(values[k] > values[k - 1])) throw Error(ErrorKind::InvalidArgument, "schedule must increase");
    if (!(values.front() > 0) || std::log10(values.back() / values.front()) < 3 - 1e-12)
        throw Error(ErrorKind::InvalidArgument, "schedule must span at least 3 decades");
    const bool discrete = std::holds_alternative<FamilyParams>(target);
    if (discrete != is_discrete_edge(edge)) throw Error(ErrorKind::InvalidArgument, "target kind does not match the edge");
    for (auto& n : probe_n)
        if (n.size() != target_p(target)) throw Error(ErrorKind::InvalidArgument, "probe multi-index length differs from p");
    for (auto& pm : perms)
        if (pm.size() != target_p(target)) throw Error(ErrorKind::InvalidArgument, "permutation length differs from p");
    if (discrete)
        for (auto& x : probe_x)
            if (!is_integer(x) || x < 0) throw Error(ErrorKind::InvalidArgument, "discrete probes must be non-negative integers");
}

void fit_convergence(ConvergenceReport& r, double lo, double hi, const Real& zero) {
    const auto& pts = r.points;
    bool all_zero = true;
    for (auto& p : pts) all_zero = all_zero && p.error <= zero;
    if (all_zero) {
        r.slope = 0;
        r.monotone = true;
        r.verdict = Verdict::Exact;
        return;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(pts.size());
    bool positive = true;
    for (auto& p : pts) {
        if (!(p.error > 0)) {
            positive = false;
            break;
        }
        const double lx = std::log(p.limit_variable), ly = static_cast<double>(log(p.error));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const std::size_t n = pts.size();
    r.monotone = n >= 3 && pts[n - 3].error > pts[n - 2].error && pts[n - 2].error > pts[n - 1].error;
    if (!positive) {
        r.slope = 0;
        r.verdict = Verdict::Fail;
        return;
    }
    r.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    r.verdict = (r.monotone && r.slope >= lo && r.slope <= hi) ? Verdict::Pass : Verdict::Fail;
}

Real scaled_recurrence(LimitEdge e, const LimitTarget& t, const RecurrenceProbe& probe, double L) {
    return to_real(scaled_recurrence_exact(e, t, probe, exact(L)));
}

Real richardson(LimitEdge e, const LimitTarget& t, const RecurrenceProbe& probe, double L) {
    const double r = richardson_ratio(e);
    const Rational a = scaled_recurrence_exact(e, t, probe, exact(L));
    const Rational b = scaled_recurrence_exact(e, t, probe, exact(r * L));
    return to_real((Rational(r) * b - a) / Rational(r - 1));
}

std::vector<ConvergenceReport> limit_edge(const LimitSchedule& s) {
    s.validate();
    const LimitEdge e = s.edge;
    const bool discrete = is_discrete_edge(e);
    const std::size_t p = target_p(s.target);
    std::vector<ConvergenceReport> out;
    auto start = [&](const char* q, std::string probe, const char* kind) {
        ConvergenceReport r;
        r.edge = edge_name(e);
        r.quantity = q;
        r.probe = std::move(probe);
        r.target_kind = kind;
        return r;
    };
    const double Lmax = s.values.back();
    // Against an extrapolated limit any rate of at least first order confirms convergence.
    auto finish = [&](ConvergenceReport& r) {
        if (discrete) fit_convergence(r);
        else fit_convergence(r, -std::numeric_limits<double>::infinity(), -0.7);
    };

    if (s.weights) {
        for (std::size_t i = 0; i < p; ++i)
            for (auto& x : s.probe_x) {
                auto r = start("weight", "i=" + std::to_string(i + 1) + " x=" + rational_probe(x),
                               discrete ? "closed form" : "continuous weight");
                const Real target = target_weight(e, s.target, i, x);
                for (double L : s.values) {
                    const Real v = scaled_weight(e, s.target, i, x, exact(L));
                    r.points.push_back({L, v, target, rel_error(v, target)});
                }
                fit_convergence(r);
                out.push_back(std::move(r));
            }
    }
    if (s.type2) {
        for (auto& n : s.probe_n)
            for (auto& x : s.probe_x) {
                auto r = start("type2", "n=" + n.str() + " x=" + rational_probe(x), discrete ? "closed form" : "richardson");
                Real target;
                Rational exact_target;
                if (discrete) {
                    exact_target = type2(discrete_target(s.target), n)(x);
                    target = to_real(exact_target);
                } else {
                    const double q = richardson_ratio(e);
                    const Rational a = scaled_type2_exact(e, s.target, n, x, exact(q * Lmax));
                    const Rational b = scaled_type2_exact(e, s.target, n, x, exact(q * q * Lmax));
                    target = to_real((Rational(q) * b - a) / Rational(q - 1));
                }
                for (double L : s.values) {
                    const Rational v = scaled_type2_exact(e, s.target, n, x, exact(L));
                    Real err;
                    if (discrete) err = to_real(exact_target == 0 ? Rational(abs(v)) : Rational(abs((v - exact_target) / exact_target)));
                    else err = rel_error(to_real(v), target);
                    r.points.push_back({L, to_real(v), target, err});
                }
                finish(r);
                out.push_back(std::move(r));
            }
    }
    if (s.recurrence) {
        for (auto& n : s.probe_n)
            for (auto& pm : s.perms)
                for (int b0 = 1; b0 >= 0; --b0)
                    for (std::size_t k = 1; k <= p; ++k) {
                        RecurrenceProbe pr{n, pm, b0 == 1, static_cast<int>(k)};
                        auto r = start(b0 ? "b0" : "bj", recurrence_label(pr), discrete ? "closed form" : "richardson");
                        Real target;
                        Rational exact_target;
                        try {
                            if (discrete) {
                                exact_target = target_recurrence(discrete_target(s.target), pr);
                                target = to_real(exact_target);
                            } else {
                                target = richardson(e, s.target, pr, richardson_ratio(e) * Lmax);
                            }
                            for (double L : s.values) {
                                const Rational v = scaled_recurrence_exact(e, s.target, pr, exact(L));
                                Real err;
                                if (discrete)
                                    err = to_real(exact_target == 0 ? Rational(abs(v))
                                                                    : Rational(abs((v - exact_target) / exact_target)));
                                else err = rel_error(to_real(v), target);
                                r.points.push_back({L, to_real(v), target, err});
                            }
                        } catch (const Error& ex) {
                            if (ex.kind() == ErrorKind::InvalidShift) continue;
                            throw;
                        }
                        finish(r);
                        out.push_back(std::move(r));
                    }
    }
    return out;
}

std::vector<HermiteAgreement> hermite_route_agreement(const HermiteParams& c, const std::vector<MultiIndex>& probe_n,
                                                      const std::vector<Permutation>& perms, double sigma_max, double tol) {
    std::vector<HermiteAgreement> out;
    const LimitTarget t = c;
    const std::size_t p = c.c.size();
    for (auto& n : probe_n)
        for (auto& pm : perms)
            for (int b0 = 1; b0 >= 0; --b0)
                for (std::size_t k = 1; k <= p; ++k) {
                    RecurrenceProbe pr{n, pm, b0 == 1, static_cast<int>(k)};
                    HermiteAgreement h;
                    h.probe = recurrence_label(pr);
                    h.kravchuk = richardson(LimitEdge::KravchukToHermite, t, pr, default_schedule(LimitEdge::KravchukToHermite).back());
                    h.charlier = richardson(LimitEdge::CharlierToHermite, t, pr, sigma_max);
                    h.laguerre2 = richardson(LimitEdge::LaguerreIIToHermite, t, pr, sigma_max);
                    auto d = [](const Real& a, const Real& b) {
                        return abs(a - b) / std::max({Real(1), abs(a), abs(b)});
                    };
                    h.max_difference = std::max({d(h.kravchuk, h.charlier), d(h.kravchuk, h.laguerre2), d(h.charlier, h.laguerre2)});
                    h.pass = h.max_difference < tol;
                    out.push_back(std::move(h));
                }
    return out;
}

}  // namespace mop
