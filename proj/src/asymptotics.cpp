#include "mop/asymptotics.hpp"

#include "mop/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <sstream>

namespace mop {
namespace {

Real lgam(const Real& z) {
    if (!(z > 0)) throw Error(ErrorKind::InvalidArgument, "log-gamma argument must be positive here");
    return boost::math::lgamma(z);
}

std::string str(const Real& v) { return v.str(12); }

void check_schedule(const std::vector<double>& z) {
    if (z.empty()) throw Error(ErrorKind::InvalidArgument, "empty schedule");
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (!(z[k] > 0)) throw Error(ErrorKind::InvalidArgument, "schedule values must be positive");
        if (k > 0 && !(z[k] > z[k - 1])) throw Error(ErrorKind::InvalidArgument, "schedule must increase");
    }
}

// log_diff(v) = log(exact) - log(asymptotic form)
template <class F>
ConvergenceReport run(std::string name, std::string probe, const std::vector<double>& sched, F log_diff) {
    check_schedule(sched);
    ConvergenceReport r;
    r.edge = std::move(name);
    r.quantity = "ratio";
    r.probe = std::move(probe);
    r.target_kind = "asymptotic form";
    for (double v : sched) {
        const Real ratio = exp(log_diff(Real(v)));
        r.points.push_back({v, ratio, Real(1), abs(ratio - 1)});
    }
    fit_convergence(r, -1.3, -0.7, Real("1e-40"));
    return r;
}

}  // namespace

ConvergenceReport stirling_ratio_check(const Real& a, const Real& b, const Real& c, const std::vector<double>& z) {
    if (!(a > 0)) throw Error(ErrorKind::InvalidArgument, "a must be positive");
    std::ostringstream p;
    p << "a=" << str(a) << " b=" << str(b) << " c=" << str(c);
    return run("gamma-ratio", p.str(), z,
               [&](const Real& t) { return lgam(a * t + b) - lgam(a * t + c) - (b - c) * log(a * t); });
}

ConvergenceReport functional_equation_check(const std::vector<double>& z) {
    return run("functional-equation", "", z, [](const Real& t) { return lgam(t + 1) - lgam(t) - log(t); });
}

ConvergenceReport stirling_check(const std::vector<double>& z) {
    const Real half_log_2pi = log(2 * boost::math::constants::pi<Real>()) / 2;
    return run("stirling", "", z,
               [&](const Real& t) { return lgam(t) - (half_log_2pi + (t - Real(0.5)) * log(t) - t); });
}

ConvergenceReport power_asymptotic_check(const PowerAsymptotic& q, const std::vector<double>& s) {
    if (!(q.x > 0)) throw Error(ErrorKind::InvalidArgument, "x must be positive");
    std::ostringstream p;
    p << "x=" << str(q.x) << " y=" << str(q.y) << " z=" << str(q.z) << " a=" << str(q.a) << " b=" << str(q.b)
      << " c=" << str(q.c);
    return run("power-sqrt-scaling", p.str(), s, [&](const Real& r) {
        const Real beta = r * r;
        const Real base = q.x * beta + q.y * r + q.z;
        if (!(base > 0)) throw Error(ErrorKind::InvalidArgument, "base is not positive at this schedule point");
        const Real e = q.a * beta + q.b * r + q.c;
        const Real form = e * log(q.x * beta) + q.a * q.y / q.x * r + q.a * q.z / q.x -
                          q.a * q.y * q.y / (2 * q.x * q.x) + q.b * q.y / q.x;
        return e * log(base) - form;
    });
}

ConvergenceReport gamma_asymptotic_check(const GammaAsymptotic& g, const std::vector<double>& s) {
    if (!(g.x > 0)) throw Error(ErrorKind::InvalidArgument, "x must be positive");
    std::ostringstream p;
    p << "x=" << str(g.x) << " y=" << str(g.y) << " z=" << str(g.z);
    const Real half_log_2pi = log(2 * boost::math::constants::pi<Real>()) / 2;
    return run("gamma-sqrt-scaling", p.str(), s, [&](const Real& r) {
        const Real beta = r * r;
        const Real arg = g.x * beta + g.y * r + g.z;
        const Real form = half_log_2pi + (arg - Real(0.5)) * log(g.x * beta) + g.y * g.y / (2 * g.x) - g.x * beta;
        return lgam(arg) - form;
    });
}

std::vector<ConvergenceReport> standard_asymptotic_checks() {
    const std::vector<double> sched{1e2, 1e3, 1e4, 1e5};
    std::vector<ConvergenceReport> out;
    out.push_back(functional_equation_check(sched));
    out.push_back(stirling_check(sched));
    out.push_back(stirling_ratio_check(2, 3, 1, sched));
    out.push_back(stirling_ratio_check(Real(1) / 3, Real(-1) / 2, Real(5) / 4, sched));
    out.push_back(power_asymptotic_check({1, 2, Real(1) / 2, 1, 1, 0}, sched));
    out.push_back(power_asymptotic_check({Real(1) / 2, -1, 3, 2, Real(-1) / 3, 1}, sched));
    out.push_back(gamma_asymptotic_check({1, 2, 0}, sched));
    out.push_back(gamma_asymptotic_check({2, Real(-3) / 2, 1}, sched));
    return out;
}

}  // namespace mop
