#pragma once

#include "mop/polynomial.hpp"
#include "mop/rational.hpp"

#include <functional>
#include <vector>

namespace mop {

// Rising factorial (x)_n.
Rational pochhammer(const Rational& x, long n);

// Terminating pFq(upper; lower; arg).
Rational eval_pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                              const Rational& arg);

// Multiple Kampe de Feriet series
//   sum_l prod(A)_{|l|} / prod(B)_{|l|} * prod_v [prod(a_v)_{l_v} / prod(b_v)_{l_v} * z_v^{l_v} / l_v!]
struct HypSeriesSpec {
    std::vector<Rational> global_upper;
    std::vector<Rational> global_lower;
    std::vector<std::vector<Rational>> upper;  // one block per variable
    std::vector<std::vector<Rational>> lower;
    std::vector<Rational> args;
};

Rational eval_kampe_de_feriet(const HypSeriesSpec& spec);

// Visits every l with 0 <= l_v <= bounds[v] and |l| <= total, lexicographically.
void for_each_index(const std::vector<long>& bounds, long total,
                    const std::function<void(const std::vector<long>&)>& fn);

// Basis element (-x)_order or (x + shift)_order.
struct ShiftedFactorial {
    enum class Kind { NegX, XPlus };
    Kind kind = Kind::NegX;
    Rational shift = 0;
    long order = 0;

    static ShiftedFactorial neg_x(long order) { return {Kind::NegX, 0, order}; }
    static ShiftedFactorial x_plus(const Rational& s, long order) { return {Kind::XPlus, s, order}; }
};

struct BasisTerm {
    Rational coeff;
    ShiftedFactorial basis;
};

Polynomial shifted_factorial_polynomial(const ShiftedFactorial& b);
Polynomial expand_in_monomials(const std::vector<BasisTerm>& terms);

}  // namespace mop
