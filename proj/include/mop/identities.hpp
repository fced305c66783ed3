#pragma once

#include "mop/multi_index.hpp"
#include "mop/rational.hpp"

#include <string>
#include <vector>

namespace mop {

struct IdentityReport {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

enum class IdentityKind { ChuVandermonde, Gauss, PfaffSaalschutz, Lemma1, Lemma2, Lemma3 };

IdentityKind parse_identity_kind(const std::string& s);
const char* identity_name(IdentityKind k);

// Union of the parameters used by the individual identities; each identity reads its own subset.
struct IdentityParams {
    Rational x, y;                  // chu_vandermonde, gauss; x is also the lemma variable
    Rational a, b, c;               // pfaff_saalschutz
    long n = 0, k = 0;              // scalar degree parameters
    std::vector<Rational> alpha;    // lemmas
    Rational beta;
    long N = 0;
    std::vector<long> nvec;
};

IdentityReport verify_identity(IdentityKind which, const IdentityParams& params);

// Coefficient C_n^{l} of the Hahn type II polynomial in the (-x)_{|l|} basis.
Rational hahn_type2_coefficient(const std::vector<Rational>& alpha, const Rational& beta, long N,
                                const MultiIndex& n, const std::vector<long>& l);

}  // namespace mop
