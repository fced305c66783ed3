#include "mop/contour.hpp"

#include "mop/complex_gamma.hpp"
#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mop {

const char* orientation_name(Orientation o) {
    return o == Orientation::Clockwise ? "clockwise" : "counterclockwise";
}

void ContourSpec::validate() const {
    if (nodes < 16 || (nodes & (nodes - 1)) != 0)
        throw Error(ErrorKind::InvalidArgument, "node count must be a power of two >= 16, got " + std::to_string(nodes));
    if (auto* c = std::get_if<Circle>(&shape)) {
        if (!(c->radius > 0)) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
    } else {
        auto& r = std::get<Rectangle>(shape);
        if (!(r.upper_right.real() > r.lower_left.real() && r.upper_right.imag() > r.lower_left.imag()))
            throw Error(ErrorKind::InvalidArgument, "degenerate rectangle");
        if (nodes % 4 != 0) throw Error(ErrorKind::InvalidArgument, "rectangle needs nodes divisible by 4");
    }
}

int ContourSpec::winding(std::complex<double> z) const {
    bool inside;
    if (auto* c = std::get_if<Circle>(&shape)) {
        inside = std::abs(z - c->center) < c->radius;
    } else {
        auto& r = std::get<Rectangle>(shape);
        inside = z.real() > r.lower_left.real() && z.real() < r.upper_right.real() && z.imag() > r.lower_left.imag() &&
                 z.imag() < r.upper_right.imag();
    }
    if (!inside) return 0;
    return orientation == Orientation::Counterclockwise ? 1 : -1;
}

double ContourSpec::distance(std::complex<double> z) const {
    if (auto* c = std::get_if<Circle>(&shape)) return std::abs(std::abs(z - c->center) - c->radius);
    auto& r = std::get<Rectangle>(shape);
    double x0 = r.lower_left.real(), x1 = r.upper_right.real(), y0 = r.lower_left.imag(), y1 = r.upper_right.imag();
    auto seg = [&](std::complex<double> a, std::complex<double> b) {
        std::complex<double> d = b - a;
        double t = std::clamp(std::real((z - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
        return std::abs(z - (a + t * d));
    };
    std::complex<double> p0(x0, y0), p1(x1, y0), p2(x1, y1), p3(x0, y1);
    return std::min({seg(p0, p1), seg(p1, p2), seg(p2, p3), seg(p3, p0)});
}

namespace {

template <class T> using C = std::complex<T>;

template <class T> C<T> ipow(C<T> z, long k) {
    if (k < 0) return T(1) / ipow(z, -k);
    C<T> r(1);
    while (k > 0) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

template <class T> C<T> poch(C<T> z, long k) {
    C<T> r(1);
    for (long j = 0; j < k; ++j) r *= z + T(j);
    return r;
}

template <class T> C<T> lg(C<T> z) { return log_gamma(z); }
template <class T> C<T> lg(T z) { return log_gamma(C<T>(z)); }

template <class T> T f(const Rational& q) { return to_float<T>(q); }

std::vector<std::size_t> components(const IntegrandSpec& s) {
    if (s.component) return {*s.component};
    std::vector<std::size_t> v(s.params.p());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

void check_spec(const IntegrandSpec& s) {
    if (s.n.size() != s.params.p()) throw Error(ErrorKind::InvalidArgument, "multi-index length differs from p");
    if (s.x < 0) throw Error(ErrorKind::InvalidArgument, "x must be a non-negative integer");
    if (s.type2 && s.component) throw Error(ErrorKind::InvalidArgument, "type II integrands have no component");
    if (s.component && *s.component >= s.params.p()) throw Error(ErrorKind::InvalidArgument, "component out of range");
    if (!s.type2 && s.n.is_zero()) throw Error(ErrorKind::EmptyComponent, "type I needs |n| >= 1");
    if (s.component && s.n[*s.component] == 0)
        throw Error(ErrorKind::EmptyComponent, "n_i = 0, the component vanishes identically");
    if (s.params.finite_support() && s.x > s.params.support_size_N())
        throw Error(ErrorKind::OutOfSupport, "x exceeds N");
}

Rational kratio(const Rational& pi) { return pi / (1 - pi); }

// Prefactor and integrand of each theorem, T-precision.
template <class T> struct Integrand {
    const IntegrandSpec& s;
    long nt;
    T x;

    explicit Integrand(const IntegrandSpec& spec) : s(spec), nt(spec.n.total()), x(static_cast<T>(spec.x)) {}

    C<T> prefactor() const {
        const auto& fp = s.params;
        const long p = static_cast<long>(fp.p());
        const T sg = (nt % 2 == 0) ? T(1) : T(-1);
        switch (fp.family()) {
        case Family::Hahn: {
            auto& h = fp.as<HahnParams>();
            const T b = f<T>(h.beta);
            const long N = h.N;
            if (s.type2) {
                Rational r = factorial(N - nt);
                for (long j = 0; j < p; ++j) r *= pochhammer(h.alpha[j] + h.beta + nt + 1, s.n[j]);
                return sg / f<T>(r) *
                       std::exp(lg<T>(nt + b + 1) + lg<T>(x + 1) + lg<T>(N - x + 1) - lg<T>(N - x + b + 1));
            }
            Rational r = factorial(N - nt + 1);
            for (long j = 0; j < p; ++j) r *= pochhammer(h.alpha[j] + h.beta + nt, s.n[j]);
            if (s.component) {
                const T ai = f<T>(h.alpha[*s.component]);
                return sg * f<T>(r / pochhammer(h.beta + 1, nt - 1)) * std::exp(lg<T>(ai + 1) - lg<T>(ai + x + 1));
            }
            return sg * f<T>(r) *
                   std::exp(lg<T>(N - x + b + 1) - lg<T>(b + nt) - lg<T>(x + 1) - lg<T>(N - x + 1));
        }
        case Family::MeixnerII: {
            auto& m = fp.as<MeixnerIIParams>();
            const T c = f<T>(m.c);
            if (s.type2) return std::pow(c / (c - 1), T(nt)) * std::exp(lg<T>(x + 1)) / std::pow(c, x);
            const T base = std::pow(c - 1, T(nt)) / std::pow(c, T(nt - 1));
            if (s.component) {
                const T bi = f<T>(m.beta[*s.component]);
                return base * std::exp(lg<T>(bi) - lg<T>(bi + x));
            }
            return base * std::pow(c, x) * std::exp(-lg<T>(x + 1));
        }
        case Family::MeixnerI: {
            auto& m = fp.as<MeixnerIParams>();
            const T b = f<T>(m.beta);
            Rational prod = 1;
            for (long j = 0; j < p; ++j) prod *= pow(1 - m.c[j], s.n[j]);
            if (s.type2) return std::exp(lg<T>(b + nt) + lg<T>(x + 1) - lg<T>(x + b)) / f<T>(prod);
            if (s.component) {
                const T ci = f<T>(m.c[*s.component]);
                return f<T>(prod / pochhammer(m.beta, nt - 1)) / std::pow(ci, x);
            }
            return f<T>(prod) * std::exp(lg<T>(x + b) - lg<T>(x + 1) - lg<T>(b + nt - 1));
        }
        case Family::Kravchuk: {
            auto& k = fp.as<KravchukParams>();
            const long N = k.N;
            Rational prod = 1;
            for (long j = 0; j < p; ++j) prod *= pow(1 - k.pi[j], s.n[j]);
            if (s.type2) return f<T>(prod / factorial(N - nt)) * std::exp(lg<T>(x + 1) + lg<T>(N - x + 1));
            if (s.component) {
                const T pi = f<T>(k.pi[*s.component]);
                return f<T>(factorial(N - nt + 1) / (factorial(N) * prod)) /
                       (std::pow(pi, x) * std::pow(1 - pi, T(N) - x));
            }
            return f<T>(factorial(N - nt + 1) / prod) * std::exp(-lg<T>(x + 1) - lg<T>(N - x + 1));
        }
        case Family::Charlier: {
            auto& ch = fp.as<CharlierParams>();
            if (s.type2) return std::exp(lg<T>(x + 1));
            if (s.component) return T(1) / std::pow(f<T>(ch.a[*s.component]), x);
            return std::exp(-lg<T>(x + 1));
        }
        }
        return 0;
    }

    C<T> operator()(C<T> t) const {
        const auto& fp = s.params;
        const long p = static_cast<long>(fp.p());
        const long xi = s.x;
        switch (fp.family()) {
        case Family::Hahn: {
            auto& h = fp.as<HahnParams>();
            const T b = f<T>(h.beta);
            const T N = static_cast<T>(h.N);
            if (s.type2) {
                C<T> prod(1);
                for (long j = 0; j < p; ++j) prod *= poch<T>(f<T>(h.alpha[j]) + T(1) - t, s.n[j]);
                return std::exp(lg(t) + lg(t + b + N + T(1)) - lg(t + b + T(nt + 1)) - lg(t + x + T(1))) * prod;
            }
            C<T> den(1);
            for (long j = 0; j < p; ++j) den *= poch<T>(f<T>(h.alpha[j]) - t, s.n[j]);
            return std::exp(lg(t + b + T(nt)) - lg(t + T(1)) - lg(t + b + N + T(2)) + lg(t + x + T(1))) / den;
        }
        case Family::MeixnerII: {
            auto& m = fp.as<MeixnerIIParams>();
            const T lc = std::log(1 - f<T>(m.c));
            if (s.type2) {
                C<T> prod(1);
                for (long j = 0; j < p; ++j) prod *= poch<T>(f<T>(m.beta[j]) - t, s.n[j]);
                return std::exp(lg(t) - t * lc - lg(t + x + T(1))) * prod;
            }
            C<T> den(1);
            for (long j = 0; j < p; ++j) den *= poch<T>(f<T>(m.beta[j]) - T(1) - t, s.n[j]);
            return std::exp(t * lc - lg(t + T(1)) + lg(t + x + T(1))) / den;
        }
        case Family::MeixnerI: {
            auto& m = fp.as<MeixnerIParams>();
            const T b = f<T>(m.beta);
            if (s.type2) {
                C<T> prod(1);
                for (long j = 0; j < p; ++j) prod *= ipow<T>(t - f<T>(m.c[j]), s.n[j]);
                return prod / (std::exp((T(nt) + b) * std::log(T(1) - t)) * ipow<T>(t, xi + 1));
            }
            C<T> den(1);
            for (long j = 0; j < p; ++j) den *= ipow<T>(t - f<T>(m.c[j]), s.n[j]);
            return std::exp((T(nt) + b - T(2)) * std::log(T(1) - t)) * ipow<T>(t, xi) / den;
        }
        case Family::Kravchuk: {
            auto& k = fp.as<KravchukParams>();
            if (s.type2) {
                C<T> prod(1);
                for (long j = 0; j < p; ++j) prod *= ipow<T>(t - f<T>(kratio(k.pi[j])), s.n[j]);
                return ipow<T>(T(1) + t, k.N - nt) / ipow<T>(t, xi + 1) * prod;
            }
            C<T> den(1);
            for (long j = 0; j < p; ++j) den *= ipow<T>(t - f<T>(kratio(k.pi[j])), s.n[j]);
            return ipow<T>(T(1) + t, nt - k.N - 2) * ipow<T>(t, xi) / den;
        }
        case Family::Charlier: {
            auto& ch = fp.as<CharlierParams>();
            if (s.type2) {
                C<T> prod(1);
                for (long j = 0; j < p; ++j) prod *= ipow<T>(t - f<T>(ch.a[j]), s.n[j]);
                return std::exp(t) / ipow<T>(t, xi + 1) * prod;
            }
            C<T> den(1);
            for (long j = 0; j < p; ++j) den *= ipow<T>(t - f<T>(ch.a[j]), s.n[j]);
            return std::exp(-t) * ipow<T>(t, xi) / den;
        }
        }
        return 0;
    }
};

// (1/2 pi i) * integral over one piece, trapezoid rule.
template <class T, class F> C<T> piece_integral(const ContourSpec& c, int nodes, const F& fn, T* abs_sum = nullptr) {
    const T pi = std::numbers::pi_v<T>;
    C<T> sum(0);
    T mag = 0;
    if (auto* circ = std::get_if<Circle>(&c.shape)) {
        const C<T> z0(static_cast<T>(circ->center.real()), static_cast<T>(circ->center.imag()));
        const T r = static_cast<T>(circ->radius);
        // half-step offset keeps the nodes off the real axis
        for (int k = 0; k < nodes; ++k) {
            const T th = T(2) * pi * (T(k) + T(0.5)) / T(nodes);
            const C<T> d = r * C<T>(std::cos(th), std::sin(th));
            const C<T> term = fn(z0 + d) * d;
            sum += term;
            mag += std::abs(term);
        }
        sum /= T(nodes);
        mag /= T(nodes);
    } else {
        auto& rect = std::get<Rectangle>(c.shape);
        const C<T> p0(static_cast<T>(rect.lower_left.real()), static_cast<T>(rect.lower_left.imag()));
        const C<T> p2(static_cast<T>(rect.upper_right.real()), static_cast<T>(rect.upper_right.imag()));
        const C<T> p1(p2.real(), p0.imag()), p3(p0.real(), p2.imag());
        const C<T> corners[] = {p0, p1, p2, p3, p0};
        const int m = nodes / 4;
        for (int e = 0; e < 4; ++e) {
            const C<T> a = corners[e], b = corners[e + 1], h = (b - a) / T(m);
            C<T> edge = (fn(a) + fn(b)) / T(2);
            T emag = (std::abs(fn(a)) + std::abs(fn(b))) / T(2);
            for (int k = 1; k < m; ++k) {
                const C<T> v = fn(a + T(k) * h);
                edge += v;
                emag += std::abs(v);
            }
            sum += edge * h;
            mag += emag * std::abs(h);
        }
        sum /= C<T>(0, 2 * pi);
        mag /= 2 * pi;
    }
    if (abs_sum) *abs_sum += mag;
    return c.orientation == Orientation::Counterclockwise ? sum : -sum;
}

}  // namespace

std::string integrand_name(const IntegrandSpec& s) {
    std::string r = std::string(family_name(s.params.family())) + (s.type2 ? " type II" : " type I");
    if (!s.type2) r += s.component ? " component " + std::to_string(*s.component + 1) : " linear form";
    return r;
}

PoleSets pole_sets(const IntegrandSpec& s) {
    check_spec(s);
    PoleSets ps;
    const auto& fp = s.params;
    const long nt = s.n.total();
    const auto comps = components(s);
    auto in_comps = [&](std::size_t j) { return std::find(comps.begin(), comps.end(), j) != comps.end(); };
    auto origin_block = [&](long last) {
        for (long k = 0; k <= last; ++k) ps.required.push_back(-static_cast<double>(k));
    };
    switch (fp.family()) {
    case Family::Hahn: {
        auto& h = fp.as<HahnParams>();
        if (s.type2) {
            origin_block(h.N);
            break;
        }
        for (std::size_t j = 0; j < fp.p(); ++j)
            for (long k = 0; k < s.n[j]; ++k)
                (in_comps(j) ? ps.required : ps.forbidden).push_back(to_double(h.alpha[j] + k));
        // poles of Gamma(t + beta + |n|)
        for (long m = 0; m < 8; ++m) ps.forbidden.push_back(to_double(-h.beta - nt - m));
        ps.re_lower = -1;
        break;
    }
    case Family::MeixnerII: {
        auto& m = fp.as<MeixnerIIParams>();
        if (s.type2) {
            origin_block(s.x);
            break;
        }
        for (std::size_t j = 0; j < fp.p(); ++j)
            for (long k = 0; k < s.n[j]; ++k)
                (in_comps(j) ? ps.required : ps.forbidden).push_back(to_double(m.beta[j] - 1 + k));
        ps.re_lower = -1;
        break;
    }
    case Family::MeixnerI: {
        auto& m = fp.as<MeixnerIParams>();
        ps.forbidden.push_back(1.0);  // branch point of (1-t)^gamma
        if (s.type2) {
            ps.required.push_back(0);
            ps.re_upper = 1;
            break;
        }
        for (std::size_t j = 0; j < fp.p(); ++j)
            if (s.n[j] > 0) (in_comps(j) ? ps.required : ps.forbidden).push_back(to_double(m.c[j]));
        ps.re_lower = 0;
        ps.re_upper = 1;
        break;
    }
    case Family::Kravchuk: {
        auto& k = fp.as<KravchukParams>();
        if (s.type2) {
            ps.required.push_back(0);
            break;
        }
        for (std::size_t j = 0; j < fp.p(); ++j)
            if (s.n[j] > 0) (in_comps(j) ? ps.required : ps.forbidden).push_back(to_double(kratio(k.pi[j])));
        if (nt - k.N - 2 < 0) ps.forbidden.push_back(-1.0);
        ps.re_lower = 0;
        break;
    }
    case Family::Charlier: {
        auto& ch = fp.as<CharlierParams>();
        if (s.type2) {
            ps.required.push_back(0);
            break;
        }
        for (std::size_t j = 0; j < fp.p(); ++j)
            if (s.n[j] > 0) (in_comps(j) ? ps.required : ps.forbidden).push_back(to_double(ch.a[j]));
        break;
    }
    }
    std::sort(ps.required.begin(), ps.required.end());
    std::sort(ps.forbidden.begin(), ps.forbidden.end());
    return ps;
}

Orientation stated_orientation(Family f, bool type2) {
    if (!type2) return Orientation::Clockwise;
    switch (f) {
    case Family::MeixnerI:
    case Family::Charlier: return Orientation::Clockwise;
    default: return Orientation::Counterclockwise;
    }
}

Orientation matching_orientation(Family, bool) { return Orientation::Counterclockwise; }

Contour choose_contour(const PoleSets& ps, Orientation o, int nodes) {
    if (ps.required.empty()) throw Error(ErrorKind::WrongEnclosure, "no poles to enclose");
    const double inf = std::numeric_limits<double>::infinity();
    const double lo_req = ps.required.front(), hi_req = ps.required.back();
    double lo = ps.re_lower.value_or(-inf), hi = ps.re_upper.value_or(inf);
    bool interleaved = false;
    for (double z : ps.forbidden) {
        if (z < lo_req) lo = std::max(lo, z);
        else if (z > hi_req) hi = std::min(hi, z);
        else interleaved = true;
    }
    if (!(lo < lo_req && hi > hi_req))
        throw Error(ErrorKind::WrongEnclosure, "required poles touch the admissible half-plane boundary");
    Contour c;
    if (!interleaved) {
        const double left = std::isinf(lo) ? lo_req - 1 : lo_req - (lo_req - lo) / 2;
        const double right = std::isinf(hi) ? hi_req + 1 : hi_req + (hi - hi_req) / 2;
        const double center = (left + right) / 2, r = (right - left) / 2;
        // geometric convergence factor of the trapezoid rule on this circle
        double rho = std::max(center - lo_req, hi_req - center) / r;
        for (double z : ps.forbidden) rho = std::max(rho, r / std::abs(z - center));
        if (rho <= 0.75) {
            c.push_back({Circle{{center, 0}, r}, o, nodes});
            return c;
        }
    }
    // one circle per required point
    std::vector<double> all = ps.required;
    all.insert(all.end(), ps.forbidden.begin(), ps.forbidden.end());
    for (double z : ps.required) {
        double gap = 1;
        for (double w : all)
            if (w != z) gap = std::min(gap, std::abs(w - z));
        if (ps.re_lower) gap = std::min(gap, z - *ps.re_lower);
        if (ps.re_upper) gap = std::min(gap, *ps.re_upper - z);
        if (!(gap > 0)) throw Error(ErrorKind::WrongEnclosure, "coincident poles");
        c.push_back({Circle{{z, 0}, gap / 2}, o, nodes});
    }
    return c;
}

void validate_contour(const Contour& c, const PoleSets& ps) {
    if (c.empty()) throw Error(ErrorKind::WrongEnclosure, "empty contour");
    const double tol = 1e-9;
    for (auto& piece : c) {
        piece.validate();
        for (const auto* v : {&ps.required, &ps.forbidden})
            for (double z : *v)
                if (piece.distance({z, 0}) < tol)
                    throw Error(ErrorKind::PoleOnContour, "singular point " + std::to_string(z) + " lies on the contour");
        double xmin, xmax;
        if (auto* circ = std::get_if<Circle>(&piece.shape)) {
            xmin = circ->center.real() - circ->radius;
            xmax = circ->center.real() + circ->radius;
        } else {
            auto& r = std::get<Rectangle>(piece.shape);
            xmin = r.lower_left.real();
            xmax = r.upper_right.real();
        }
        if ((ps.re_lower && xmin <= *ps.re_lower) || (ps.re_upper && xmax >= *ps.re_upper))
            throw Error(ErrorKind::WrongEnclosure, "contour leaves the admissible half-plane");
    }
    auto wind = [&](double z) {
        int w = 0;
        for (auto& piece : c) w += piece.winding({z, 0});
        return w;
    };
    const int want = c.front().orientation == Orientation::Counterclockwise ? 1 : -1;
    for (auto& piece : c)
        if (piece.orientation != c.front().orientation)
            throw Error(ErrorKind::WrongEnclosure, "pieces with mixed orientation");
    for (double z : ps.required)
        if (wind(z) != want) throw Error(ErrorKind::WrongEnclosure, "pole " + std::to_string(z) + " not enclosed exactly once");
    for (double z : ps.forbidden)
        if (wind(z) != 0) throw Error(ErrorKind::WrongEnclosure, "singular point " + std::to_string(z) + " is enclosed");
}

template <class T> QuadratureResult<T> contour_quadrature(const IntegrandSpec& s, const Contour& c) {
    validate_contour(c, pole_sets(s));
    Integrand<T> fn(s);
    const C<T> pre = fn.prefactor();
    C<T> a(0), b(0);
    T mag = 0;
    for (auto& piece : c) {
        a += piece_integral<T>(piece, piece.nodes, fn, &mag);
        b += piece_integral<T>(piece, 2 * piece.nodes, fn);
    }
    QuadratureResult<T> r;
    r.scale = std::abs(pre) * mag;
    r.value = pre * a;
    r.refined = pre * b;
    r.error_estimate = std::abs(r.refined - r.value);
    return r;
}

template <class T> T closed_form_value(const IntegrandSpec& s, bool* exact_zero) {
    check_spec(s);
    const Rational xq(s.x);
    if (s.type2) {
        const Rational v = type2(s.params, s.n)(xq);
        if (exact_zero) *exact_zero = v == 0;
        return to_float<T>(v);
    }
    if (s.component) {
        auto a = type1(s.params, s.n, *s.component);
        const Rational v = a.rational_part(xq);
        if (exact_zero) *exact_zero = v == 0;
        return to_float<T>(v) * static_cast<T>(a.prefactor.value());
    }
    auto lf = linear_form(s.params, s.n, s.x);
    T sum = 0;
    Rational rational_sum = 0;
    bool all_zero = true, all_rational = true;
    for (std::size_t i = 0; i < lf.components.size(); ++i) {
        auto& a = lf.components[i];
        const Rational v = a.rational_part(xq) * lf.weights[i];
        all_zero = all_zero && v == 0;
        all_rational = all_rational && a.prefactor.kind == PrefactorToken::Kind::One;
        rational_sum += v;
        sum += to_float<T>(v) * static_cast<T>(a.prefactor.value());
    }
    // distinct transcendental tokens cannot cancel, so only the all-rational case can sum to zero
    if (exact_zero) *exact_zero = all_rational ? rational_sum == 0 : all_zero;
    return sum;
}

template QuadratureResult<double> contour_quadrature<double>(const IntegrandSpec&, const Contour&);
template QuadratureResult<long double> contour_quadrature<long double>(const IntegrandSpec&, const Contour&);
template double closed_form_value<double>(const IntegrandSpec&, bool*);
template long double closed_form_value<long double>(const IntegrandSpec&, bool*);

}  // namespace mop
