#pragma once

#include "mop/limits.hpp"

#include <vector>

namespace mop {

// Gamma-function asymptotics as convergence checks. Each point records the ratio of the exact value
// (extended-precision log-gamma) to the asymptotic form; the error is |ratio - 1|.

// Gamma(a z + b) / Gamma(a z + c) against (a z)^{b - c}, a > 0.
ConvergenceReport stirling_ratio_check(const Real& a, const Real& b, const Real& c, const std::vector<double>& z);

// Gamma(z + 1) / (z Gamma(z)); the ratio is 1 to working precision and the verdict is Exact.
ConvergenceReport functional_equation_check(const std::vector<double>& z);

// Gamma(z) against sqrt(2 pi) z^{z - 1/2} e^{-z}.
ConvergenceReport stirling_check(const std::vector<double>& z);

// (x beta + y sqrt(beta) + z)^{a beta + b sqrt(beta) + c} against
// (x beta)^{a beta + b sqrt(beta) + c} exp(a y/x sqrt(beta) + a z/x - a y^2/(2 x^2) + b y/x), x > 0.
struct PowerAsymptotic {
    Real x = 1, y = 0, z = 0, a = 1, b = 0, c = 0;
};
// Gamma(x beta + y sqrt(beta) + z) against sqrt(2 pi) (x beta)^{x beta + y sqrt(beta) + z - 1/2} exp(y^2/(2x) - x beta).
struct GammaAsymptotic {
    Real x = 1, y = 0, z = 0;
};

// Both run on s = sqrt(beta), in which the corrections are O(1/s).
ConvergenceReport power_asymptotic_check(const PowerAsymptotic& p, const std::vector<double>& s);
ConvergenceReport gamma_asymptotic_check(const GammaAsymptotic& g, const std::vector<double>& s);

// The fixed battery: functional equation, Stirling, Gamma(2z+3)/Gamma(2z+1), and the two sqrt(beta)
// scalings at a few parameter choices, all over 10^2 .. 10^5.
std::vector<ConvergenceReport> standard_asymptotic_checks();

}  // namespace mop
