#pragma once

#include "mop/families.hpp"
#include "mop/limits.hpp"

#include <vector>

namespace mop {

// Normalized power moment mu_j from the closed forms against a brute-force sum over the support,
// evaluated in extended precision. Infinite supports are truncated once the tail is below 1e-45
// of the running sums; the weight is generated by its ratio w(x+1)/w(x), so the mass never enters.
struct MomentComparison {
    std::size_t component = 0;
    long j = 0;
    Real closed, brute, rel_error;
    long terms = 0;
};

std::vector<MomentComparison> validate_moments(const FamilyParams& fp, long jmax = 10);

}  // namespace mop
