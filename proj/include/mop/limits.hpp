#pragma once

#include "mop/families.hpp"
#include "mop/multi_index.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mop {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& q);

// Continuous endpoints of the scheme; only their weights are implemented.
struct JacobiPineiroParams {
    std::vector<Rational> alpha;
    Rational beta;
};
struct LaguerreIParams {
    std::vector<Rational> alpha;
};
struct LaguerreIIParams {
    Rational alpha0;
    std::vector<Rational> c;
};
struct HermiteParams {
    std::vector<Rational> c;
};

// x^{alpha_i}(1-x)^beta, x^{alpha_i}e^{-x}, x^{alpha0}e^{-c_i x}, e^{-x^2+c_i x}.
Real continuous_weight(const JacobiPineiroParams& p, std::size_t i, const Real& x);
Real continuous_weight(const LaguerreIParams& p, std::size_t i, const Real& x);
Real continuous_weight(const LaguerreIIParams& p, std::size_t i, const Real& x);
Real continuous_weight(const HermiteParams& p, std::size_t i, const Real& x);

enum class LimitEdge {
    HahnToMeixnerII,
    HahnToMeixnerI,
    HahnToKravchuk,
    MeixnerIIToCharlier,
    MeixnerIToCharlier,
    KravchukToCharlier,
    HahnToJacobiPineiro,
    MeixnerIIToLaguerreI,
    MeixnerIToLaguerreII,
    KravchukToHermite,
    CharlierToHermite,
    LaguerreIIToHermite,
};

const char* edge_name(LimitEdge e);  // e.g. "hahn->meixner2"
LimitEdge parse_edge(const std::string& s);
std::vector<LimitEdge> all_edges();
bool is_discrete_edge(LimitEdge e);
// Name of the limit variable. Charlier and Laguerre II to Hermite use sigma = sqrt(2 beta), the scale
// of the argument, in which the corrections are O(1/sigma); Kravchuk to Hermite corrections are O(1/N).
const char* limit_variable_name(LimitEdge e);

using LimitTarget = std::variant<FamilyParams, JacobiPineiroParams, LaguerreIParams, LaguerreIIParams, HermiteParams>;
std::size_t target_p(const LimitTarget& t);

enum class LimitQuantity { Weight, Type2Value, RecurrenceB0, RecurrenceBj };
const char* quantity_name(LimitQuantity q);

struct LimitSchedule {
    LimitEdge edge;
    LimitTarget target;
    std::vector<double> values;      // limit variable, >= 4 points over >= 3 decades
    std::vector<Rational> probe_x;   // integers for discrete targets
    std::vector<MultiIndex> probe_n;
    std::vector<Permutation> perms;  // for the recurrence coefficients
    bool weights = true, type2 = true, recurrence = true;

    void validate() const;  // throws InvalidArgument
};

// Geometric 10^2 .. 10^5 schedule; Kravchuk to Hermite uses N = 2 sigma^2 over roughly 2*10^2 .. 2*10^5.
std::vector<double> default_schedule(LimitEdge e);

struct ConvergencePoint {
    double limit_variable = 0;
    Real value, target, error;
};

enum class Verdict { Pass, Exact, Fail };
const char* verdict_name(Verdict v);

struct ConvergenceReport {
    std::string edge, quantity, probe;
    std::string target_kind;  // "closed form", "continuous weight" or "richardson"
    std::vector<ConvergencePoint> points;
    double slope = 0;
    bool monotone = false;
    Verdict verdict = Verdict::Fail;
};

// Least-squares log-log slope, monotone decay over the last three points, verdict against the
// band [lo, hi]. Errors that vanish identically give Exact.
void fit_convergence(ConvergenceReport& r, double lo = -1.3, double hi = -0.7, const Real& zero = Real(0));

std::vector<ConvergenceReport> limit_edge(const LimitSchedule& s);

// Scaled source value of one quantity at limit variable L; exposed for the Hermite comparison.
struct RecurrenceProbe {
    MultiIndex n;
    Permutation perm;
    bool b0 = true;  // b0(k) or b^j
    int index = 1;   // k or j, 1-based
};
Real scaled_recurrence(LimitEdge e, const LimitTarget& t, const RecurrenceProbe& probe, double L);

// One-level Richardson estimate from the values at L and r L, assuming O(1/L) corrections; r = 10, or
// 100 for Kravchuk to Hermite so that sqrt(N/2) stays rational.
Real richardson(LimitEdge e, const LimitTarget& t, const RecurrenceProbe& probe, double L);

struct HermiteAgreement {
    std::string probe;
    Real kravchuk, charlier, laguerre2;  // Richardson estimates at the largest schedule point
    Real max_difference;
    bool pass = false;
};
// Pairwise agreement of the three Hermite routes on b0(k) and b^j, tolerance 1e-6. Kravchuk is taken at
// the end of its default schedule, Charlier and Laguerre II at sigma_max.
std::vector<HermiteAgreement> hermite_route_agreement(const HermiteParams& c, const std::vector<MultiIndex>& probe_n,
                                                      const std::vector<Permutation>& perms, double sigma_max,
                                                      double tol = 1e-6);

}  // namespace mop
