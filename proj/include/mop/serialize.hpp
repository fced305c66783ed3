#pragma once

#include "mop/families.hpp"

#include <json.hpp>

#include <string>

namespace mop {

using ojson = nlohmann::ordered_json;

ojson rationals_to_json(const std::vector<Rational>& v);
ojson polynomial_to_json(const Polynomial& p);  // {"coeffs": [...]} lowest degree first
ojson multi_index_to_json(const MultiIndex& n);
ojson permutation_to_json(const Permutation& perm);

// {"family":"hahn","alpha":["1/2","5/7"],"beta":"1/3","N":12} and the analogous shapes
//   meixner2 {beta:[...], c}, meixner1 {beta, c:[...]}, kravchuk {pi:[...], N}, charlier {a:[...]}.
ojson params_to_json(const FamilyParams& fp);
// Validates; throws InvalidParams / InvalidArgument.
FamilyParams params_from_json(const ojson& j);

Rational rational_from_json(const ojson& j);  // string "p/q" or a JSON number
MultiIndex multi_index_from_json(const ojson& j);
Permutation permutation_from_json(const ojson& j);

// One verification outcome: {check, family, params, n, perm, status, lhs, rhs}.
struct VerificationReport {
    std::string check;
    std::string family;
    ojson params;
    ojson n;
    ojson perm;
    std::string status;  // pass | fail | adjudicated
    ojson lhs;
    ojson rhs;
};
ojson report_to_json(const VerificationReport& r);

}  // namespace mop
