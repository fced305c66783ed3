#include "mop/analytic_sweep.hpp"

#include "mop/error.hpp"
#include "mop/moment_check.hpp"

#include <cmath>

namespace mop {

Precision parse_precision(const std::string& s) {
    if (s == "double") return Precision::Double;
    if (s == "extended") return Precision::Extended;
    throw Error(ErrorKind::InvalidArgument, "precision must be double or extended, got '" + s + "'");
}

const char* precision_name(Precision p) { return p == Precision::Double ? "double" : "extended"; }

namespace {

VerificationReport report(const std::string& check, const FamilyParams& fp, const MultiIndex* n, bool pass,
                          ojson lhs, ojson rhs) {
    return {check,
            family_name(fp.family()),
            params_to_json(fp),
            n ? multi_index_to_json(*n) : ojson(nullptr),
            nullptr,
            pass ? "pass" : "fail",
            std::move(lhs),
            std::move(rhs)};
}

std::string real_str(const Real& v) { return v.str(25, std::ios_base::scientific); }

template <class T>
void integral_point(const IntegrandSpec& s, const IntegralSweepConfig& cfg, SuiteResult& res) {
    const Orientation o = cfg.stated_orientation ? stated_orientation(s.params.family(), s.type2)
                                                 : matching_orientation(s.params.family(), s.type2);
    const auto contour = choose_contour(pole_sets(s), o, cfg.nodes);
    const auto q = contour_quadrature<T>(s, contour);
    bool zero = false;
    const T closed = closed_form_value<T>(s, &zero);
    const T dev = relative_deviation<T>(q.value, closed, zero, q.scale);
    const T dbl = q.error_estimate / (zero ? q.scale : std::abs(closed));
    const bool ok = dev < cfg.tol && dbl < cfg.doubling_tol;
    ojson lhs{{"integrand", integrand_name(s)},
              {"x", s.x},
              {"re", static_cast<double>(q.value.real())},
              {"im", static_cast<double>(q.value.imag())},
              {"orientation", orientation_name(o)},
              {"nodes", cfg.nodes},
              {"relative_deviation", static_cast<double>(dev)},
              {"doubling_change", static_cast<double>(dbl)}};
    if (zero) lhs["deviation_scale"] = static_cast<double>(q.scale);
    res.record(report("integral", s.params, &s.n, ok, std::move(lhs), ojson{{"closed_form", static_cast<double>(closed)}}),
               cfg.all_reports);
}

}  // namespace

SuiteResult verify_integral_sweep(Family f, const IntegralSweepConfig& cfg) {
    SuiteResult res;
    res.name = std::string("integrals:") + family_name(f);
    for (std::size_t p : cfg.p_values)
        for (int d = 0; d < cfg.draws; ++d) {
            Rng rng{cfg.seed, 11, static_cast<std::uint64_t>(f), p, static_cast<std::uint64_t>(d)};
            const FamilyParams fp = random_params(f, p, rng, cfg.max_total);
            const long xmax = fp.finite_support() ? std::min(cfg.max_x, fp.support_size_N()) : cfg.max_x;
            for (const auto& n : multi_indices_up_to(p, cfg.max_total))
                for (long x = 0; x <= xmax; ++x)
                    for (std::size_t kind = 0; kind < 2 + p; ++kind) {
                        IntegrandSpec s{fp, n, x, kind == 0, std::nullopt};
                        if (kind >= 2) s.component = kind - 2;
                        if (!s.type2 && n.is_zero()) continue;
                        if (s.component && n[*s.component] == 0) continue;
                        try {
                            if (cfg.precision == Precision::Double) integral_point<double>(s, cfg, res);
                            else integral_point<long double>(s, cfg, res);
                        } catch (const std::exception& e) {
                            res.record(report("integral", fp, &n, false, ojson{{"integrand", integrand_name(s)}, {"x", x}, {"error", e.what()}}, nullptr),
                                       cfg.all_reports);
                        }
                    }
        }
    return res;
}

SuiteResult verify_rodrigues_sweep(Family f, const SweepConfig& cfg, RodriguesSign sign) {
    if (f != Family::MeixnerI && f != Family::Kravchuk && f != Family::Charlier)
        throw Error(ErrorKind::InvalidArgument, std::string("no Rodrigues formula for ") + family_name(f));
    SuiteResult res;
    res.name = std::string("rodrigues:") + family_name(f);
    for (std::size_t p : cfg.p_values)
        for (int d = 0; d < cfg.draws; ++d) {
            Rng rng{cfg.seed, 12, static_cast<std::uint64_t>(f), p, static_cast<std::uint64_t>(d)};
            const FamilyParams fp = random_params(f, p, rng, cfg.max_total);
            for (const auto& n : multi_indices_up_to(p, cfg.max_total))
                for (std::size_t i = 0; i < p; ++i) {
                    if (n[i] == 0) continue;
                    try {
                        const auto r = rodrigues_type1(fp, n, i, sign);
                        const auto c = type1(fp, n, i);
                        // both sides over the closed form's prefactor token
                        const Polynomial lhs = r.rational_part * token_ratio(r.prefactor, c.prefactor);
                        const bool ok = lhs == c.rational_part;
                        res.record(report("rodrigues", fp, &n, ok,
                                          ojson{{"component", i + 1}, {"prefactor", c.prefactor.str()}, {"coeffs", rationals_to_json(lhs.coeffs())}},
                                          ojson{{"prefactor", c.prefactor.str()}, {"coeffs", rationals_to_json(c.rational_part.coeffs())}}),
                                   cfg.all_reports);
                    } catch (const std::exception& e) {
                        res.record(report("rodrigues", fp, &n, false, e.what(), nullptr), cfg.all_reports);
                    }
                }
        }
    return res;
}

SuiteResult verify_moment_sweep(Family f, const SweepConfig& cfg, long jmax, const Real& tol) {
    SuiteResult res;
    res.name = std::string("moments:") + family_name(f);
    for (std::size_t p : cfg.p_values)
        for (int d = 0; d < cfg.draws; ++d) {
            Rng rng{cfg.seed, 13, static_cast<std::uint64_t>(f), p, static_cast<std::uint64_t>(d)};
            const FamilyParams fp = random_params(f, p, rng, cfg.max_total);
            try {
                for (const auto& c : validate_moments(fp, jmax)) {
                    const bool ok = c.rel_error < tol;
                    res.record(report("moment", fp, nullptr, ok,
                                      ojson{{"component", c.component + 1}, {"j", c.j}, {"brute_force", real_str(c.brute)},
                                            {"terms", c.terms}, {"relative_error", static_cast<double>(c.rel_error)}},
                                      ojson{{"closed_form", real_str(c.closed)}}),
                               cfg.all_reports);
                }
            } catch (const std::exception& e) {
                res.record(report("moment", fp, nullptr, false, e.what(), nullptr), cfg.all_reports);
            }
        }
    return res;
}

bool LimitSuite::ok() const {
    for (const auto& r : reports)
        if (r.verdict == Verdict::Fail) return false;
    for (const auto& h : hermite)
        if (!h.pass) return false;
    return true;
}

LimitSchedule default_limit_schedule(LimitEdge e) {
    const auto charlier = FamilyParams::make(CharlierParams{{Rational(1, 2), Rational(5, 2)}});
    const HermiteParams hermite{{Rational(1, 2), Rational(-1)}};
    LimitTarget t = hermite;
    switch (e) {
    case LimitEdge::HahnToMeixnerII:
        t = FamilyParams::make(MeixnerIIParams{{Rational(3, 2), Rational(7, 3)}, Rational(1, 3)});
        break;
    case LimitEdge::HahnToMeixnerI:
        t = FamilyParams::make(MeixnerIParams{Rational(3, 2), {Rational(1, 4), Rational(2, 3)}});
        break;
    case LimitEdge::HahnToKravchuk: t = FamilyParams::make(KravchukParams{{Rational(1, 3), Rational(1, 2)}, 6}); break;
    case LimitEdge::MeixnerIIToCharlier:
    case LimitEdge::MeixnerIToCharlier:
    case LimitEdge::KravchukToCharlier: t = charlier; break;
    case LimitEdge::HahnToJacobiPineiro: t = JacobiPineiroParams{{Rational(1, 3), Rational(5, 4)}, Rational(1, 2)}; break;
    case LimitEdge::MeixnerIIToLaguerreI: t = LaguerreIParams{{Rational(1, 3), Rational(5, 4)}}; break;
    case LimitEdge::MeixnerIToLaguerreII: t = LaguerreIIParams{Rational(1, 2), {Rational(1), Rational(5, 2)}}; break;
    case LimitEdge::KravchukToHermite:
    case LimitEdge::CharlierToHermite:
    case LimitEdge::LaguerreIIToHermite: t = hermite; break;
    }
    LimitSchedule s{e, t, default_schedule(e), {}, {MultiIndex({1, 0}), MultiIndex({1, 1}), MultiIndex({2, 1})},
                    {Permutation::identity(2), Permutation({2, 1})}};
    if (is_discrete_edge(e)) s.probe_x = {Rational(0), Rational(1), Rational(3)};
    else if (std::holds_alternative<HermiteParams>(t)) s.probe_x = {Rational(1, 2), Rational(-1, 3)};
    else s.probe_x = {Rational(1, 2), Rational(1, 3)};
    return s;
}

LimitSuite run_limit_suite(const std::vector<LimitEdge>& edges, bool with_hermite_agreement) {
    LimitSuite out;
    for (LimitEdge e : edges) {
        auto r = limit_edge(default_limit_schedule(e));
        for (auto& x : r) out.reports.push_back(std::move(x));
    }
    if (with_hermite_agreement)
        out.hermite = hermite_route_agreement(HermiteParams{{Rational(1, 2), Rational(-1)}},
                                              {MultiIndex({1, 0}), MultiIndex({1, 1}), MultiIndex({2, 1})},
                                              {Permutation::identity(2), Permutation({2, 1})}, 1e5);
    return out;
}

ojson convergence_report_json(const ConvergenceReport& r) {
    ojson pts = ojson::array();
    for (const auto& p : r.points)
        pts.push_back(ojson{{"limit_variable", p.limit_variable},
                            {"value", static_cast<double>(p.value)},
                            {"target", static_cast<double>(p.target)},
                            {"error", static_cast<double>(p.error)}});
    return ojson{{"edge", r.edge},
                 {"quantity", r.quantity},
                 {"probe", r.probe},
                 {"target_kind", r.target_kind},
                 {"points", pts},
                 {"slope", std::isfinite(r.slope) ? ojson(r.slope) : ojson(nullptr)},
                 {"monotone", r.monotone},
                 {"verdict", verdict_name(r.verdict)}};
}

ojson hermite_agreement_json(const HermiteAgreement& h) {
    return ojson{{"probe", h.probe},
                 {"kravchuk", static_cast<double>(h.kravchuk)},
                 {"charlier", static_cast<double>(h.charlier)},
                 {"laguerre2", static_cast<double>(h.laguerre2)},
                 {"max_difference", static_cast<double>(h.max_difference)},
                 {"pass", h.pass}};
}

}  // namespace mop
