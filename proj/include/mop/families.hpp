#pragma once

#include "mop/multi_index.hpp"
#include "mop/polynomial.hpp"
#include "mop/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace mop {

enum class Family { Hahn, MeixnerII, MeixnerI, Kravchuk, Charlier };

const char* family_name(Family f);  // "hahn", "meixner2", ...
Family parse_family(const std::string& s);

struct HahnParams {
    std::vector<Rational> alpha;
    Rational beta;
    long N = 0;
};
struct MeixnerIIParams {
    std::vector<Rational> beta;
    Rational c;
};
struct MeixnerIParams {
    Rational beta;
    std::vector<Rational> c;
};
struct KravchukParams {
    std::vector<Rational> pi;
    long N = 0;
};
struct CharlierParams {
    std::vector<Rational> a;
};

using ParamVariant = std::variant<HahnParams, MeixnerIIParams, MeixnerIParams, KravchukParams, CharlierParams>;

// Throws InvalidParams when the range or AT conditions fail.
void validate(const ParamVariant& v);

class FamilyParams {
public:
    // Validated construction.
    static FamilyParams make(ParamVariant v);
    // Skips the AT checks. Used for limit schedules where parameter differences can be integers
    // (the formulas stay well defined as long as no denominator vanishes).
    static FamilyParams unchecked(ParamVariant v);

    Family family() const { return static_cast<Family>(v_.index()); }
    std::size_t p() const;
    bool finite_support() const;
    long support_size_N() const;  // N for Hahn/Kravchuk, -1 otherwise
    const ParamVariant& value() const { return v_; }
    template <class T> const T& as() const { return std::get<T>(v_); }

private:
    explicit FamilyParams(ParamVariant v) : v_(std::move(v)) {}
    ParamVariant v_;
};

// Symbolic transcendental scalar multiplying a rational polynomial.
struct PrefactorToken {
    enum class Kind { One, ExpNeg, PowOneMinusC, PowOneMinusCi };
    Kind kind = Kind::One;
    int index = 0;      // 1-based component for ExpNeg / PowOneMinusCi
    Rational base;      // a_i for ExpNeg; 1-c or 1-c_i for the power kinds
    Rational exponent;  // power kinds only

    static PrefactorToken one() { return {}; }
    static PrefactorToken exp_neg(int i, const Rational& a) { return {Kind::ExpNeg, i, a, 0}; }
    static PrefactorToken pow_one_minus_c(const Rational& one_minus_c, const Rational& e) {
        return {Kind::PowOneMinusC, 0, one_minus_c, e};
    }
    static PrefactorToken pow_one_minus_ci(int i, const Rational& one_minus_ci, const Rational& e) {
        return {Kind::PowOneMinusCi, i, one_minus_ci, e};
    }

    long double value() const;
    std::string str() const;
};

// num/den as an exact rational; throws InvalidArgument when the quotient is transcendental.
Rational token_ratio(const PrefactorToken& num, const PrefactorToken& den);

struct PrefactoredPolynomial {
    PrefactorToken prefactor;
    Polynomial rational_part;

    long double value(long double x) const;
};

// Total mass m0 = rational_factor / token.
struct MassToken {
    PrefactorToken token;
    Rational rational_factor;
};

struct RecurrenceCoefficients {
    std::vector<Rational> b0;  // b0(k), k = 1..p
    std::vector<Rational> bj;  // b^j, j = 1..p
    Permutation perm;
};

// Component indices i are 0-based throughout the C++ API.

Rational weight(const FamilyParams& fp, std::size_t i, long x);
MassToken weight_mass_token(const FamilyParams& fp, std::size_t i);

enum class Type2Representation { CoefficientSum, WeightedPfq };
Polynomial type2(const FamilyParams& fp, const MultiIndex& n,
                 Type2Representation rep = Type2Representation::CoefficientSum);

// Printed: the boxed closed form. Alternative: the second Meixner I representation.
// Derivation: the pre-reindexing sum of the limit derivation (Kravchuk and Meixner I only).
enum class Type1Form { Printed, Alternative, Derivation };
PrefactoredPolynomial type1(const FamilyParams& fp, const MultiIndex& n, std::size_t i,
                            Type1Form form = Type1Form::Printed);
bool type1_alt_equivalence(const FamilyParams& fp, const MultiIndex& n, std::size_t i);

// m0^{(i)} * A^{(i)} as an exact polynomial.
Polynomial mass_normalized(const FamilyParams& fp, std::size_t i, const PrefactoredPolynomial& a);

struct LinearFormValue {
    long double value = 0;
    bool exact = false;
    Rational exact_value;                           // set when exact
    std::vector<PrefactoredPolynomial> components;  // A^{(i)}
    std::vector<Rational> weights;                  // w_i(x)
};
LinearFormValue linear_form(const FamilyParams& fp, const MultiIndex& n, long x);

RecurrenceCoefficients nnrc(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm);

}  // namespace mop
