#pragma once

#include "mop/families.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomial.hpp"

namespace mop {

// num/den over Q, kept with a monic denominator and the common factor removed.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction polynomial(Polynomial p) { return {std::move(p), Polynomial::constant(1)}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    RationalFunction derivative() const;
    // Throws SingularDenominator at a pole.
    Rational operator()(const Rational& v) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const Rational& s, const RationalFunction& a);

private:
    Polynomial num_, den_;
};

Polynomial polynomial_gcd(Polynomial a, Polynomial b);  // monic, or zero when both vanish

// Leading sign as printed with the formula, or the sign that reproduces the closed form.
enum class RodriguesSign { Printed, Corrected };

// Type I component i (0-based) from the Rodrigues-type formula of Meixner I, Kravchuk or Charlier.
// The (n_i - 1)-th derivative is taken exactly in {rational function} x {e^{-a} or (1-c)^gamma}; the
// result carries the same prefactor token as type1(), with the rational part interpolated from
// n_i + 2 integer points so that a degree excess would show.
PrefactoredPolynomial rodrigues_type1(const FamilyParams& fp, const MultiIndex& n, std::size_t i,
                                      RodriguesSign sign = RodriguesSign::Corrected);

// Exact comparison with type1(fp, n, i).
bool rodrigues_matches_closed_form(const FamilyParams& fp, const MultiIndex& n, std::size_t i,
                                   RodriguesSign sign = RodriguesSign::Corrected);

}  // namespace mop
