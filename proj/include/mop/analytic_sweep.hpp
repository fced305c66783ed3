#pragma once

#include "mop/contour.hpp"
#include "mop/limits.hpp"
#include "mop/rodrigues.hpp"
#include "mop/sweep.hpp"

#include <cstdint>
#include <string>

namespace mop {

enum class Precision { Double, Extended };
Precision parse_precision(const std::string& s);  // "double" | "extended"
const char* precision_name(Precision p);

struct IntegralSweepConfig {
    std::uint64_t seed = 0;
    int draws = 4;  // per family and p
    std::vector<std::size_t> p_values{1, 2};
    long max_total = 3;
    long max_x = 5;
    int nodes = 256;
    Precision precision = Precision::Double;
    // Integrate with the orientation stated with each theorem instead of the one matching the closed forms.
    bool stated_orientation = false;
    double tol = 1e-8;
    double doubling_tol = 1e-10;
    bool all_reports = false;
};

// Every contour representation (type II, the type I linear form and each type I component) against
// the closed forms. A point passes when the deviation is below tol and doubling the nodes changes the
// value by less than doubling_tol, both relative.
SuiteResult verify_integral_sweep(Family f, const IntegralSweepConfig& cfg);

// Rodrigues (exact differentiation) against the closed type I for Meixner I, Kravchuk and Charlier.
SuiteResult verify_rodrigues_sweep(Family f, const SweepConfig& cfg, RodriguesSign sign = RodriguesSign::Corrected);

// Brute-force truncated moment sums against the closed forms, j <= jmax, relative tolerance tol.
SuiteResult verify_moment_sweep(Family f, const SweepConfig& cfg, long jmax = 10, const Real& tol = Real("1e-20"));

// Default schedules and probes for every Askey edge, plus the Hermite route agreement.
struct LimitSuite {
    std::vector<ConvergenceReport> reports;
    std::vector<HermiteAgreement> hermite;
    bool ok() const;
};
LimitSuite run_limit_suite(const std::vector<LimitEdge>& edges, bool with_hermite_agreement = true);
// The default target and schedule used for an edge by run_limit_suite.
LimitSchedule default_limit_schedule(LimitEdge e);

ojson convergence_report_json(const ConvergenceReport& r);
ojson hermite_agreement_json(const HermiteAgreement& h);

}  // namespace mop
