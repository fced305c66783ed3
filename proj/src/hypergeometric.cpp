#include "mop/hypergeometric.hpp"

#include "mop/error.hpp"

#include <algorithm>
#include <limits>

namespace mop {

Rational pochhammer(const Rational& x, long n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative Pochhammer order");
    Rational r(1);
    for (long k = 0; k < n; ++k) {
        r *= x + k;
        if (r == 0) break;
    }
    return r;
}

namespace {

constexpr long kNone = std::numeric_limits<long>::max();

long termination_order(const std::vector<Rational>& upper) {
    long best = kNone;
    for (const auto& a : upper) {
        long m;
        if (is_nonpositive_integer(a, &m)) best = std::min(best, m);
    }
    return best;
}

void check_lower(const std::vector<Rational>& lower, long reach) {
    for (const auto& b : lower) {
        long k;
        if (is_nonpositive_integer(b, &k) && k < reach)
            throw Error(ErrorKind::LowerParamPole,
                        "lower parameter " + to_string(b) + " vanishes within the summation range 0.." +
                            std::to_string(reach));
    }
}

}  // namespace

Rational eval_pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                              const Rational& arg) {
    const long m = termination_order(upper);
    if (m == kNone) throw Error(ErrorKind::NonTerminating, "no non-positive integer upper parameter");
    check_lower(lower, m);

    Rational sum(1), term(1);
    for (long l = 0; l < m; ++l) {
        for (const auto& a : upper) term *= a + l;
        for (const auto& b : lower) term /= b + l;
        term *= arg;
        term /= l + 1;
        sum += term;
    }
    return sum;
}

void for_each_index(const std::vector<long>& bounds, long total,
                    const std::function<void(const std::vector<long>&)>& fn) {
    const std::size_t p = bounds.size();
    std::vector<long> l(p, 0);
    if (p == 0) {
        fn(l);
        return;
    }
    long used = 0;
    while (true) {
        fn(l);
        // advance the last coordinate first so the order is lexicographic
        std::size_t v = p;
        while (v-- > 0) {
            if (l[v] < bounds[v] && used < total) {
                ++l[v];
                ++used;
                break;
            }
            used -= l[v];
            l[v] = 0;
            if (v == 0) return;
        }
    }
}

Rational eval_kampe_de_feriet(const HypSeriesSpec& s) {
    const std::size_t p = s.args.size();
    if (s.upper.size() != p || s.lower.size() != p)
        throw Error(ErrorKind::InvalidArgument, "parameter blocks do not match the number of arguments");

    const long mg = termination_order(s.global_upper);
    std::vector<long> bounds(p);
    long reach_sum = 0;
    for (std::size_t v = 0; v < p; ++v) {
        long mv = std::min(termination_order(s.upper[v]), mg);
        if (mv == kNone)
            throw Error(ErrorKind::NonTerminating, "summation variable " + std::to_string(v + 1) + " does not terminate");
        bounds[v] = mv;
        reach_sum += mv;
    }
    const long total = std::min(mg, reach_sum);
    check_lower(s.global_lower, total);
    for (std::size_t v = 0; v < p; ++v) check_lower(s.lower[v], bounds[v]);

    // Per-variable factors depend only on l_v; tabulate them.
    std::vector<std::vector<Rational>> table(p);
    for (std::size_t v = 0; v < p; ++v) {
        table[v].resize(bounds[v] + 1);
        Rational t(1);
        table[v][0] = t;
        for (long l = 0; l < bounds[v]; ++l) {
            for (const auto& a : s.upper[v]) t *= a + l;
            for (const auto& b : s.lower[v]) t /= b + l;
            t *= s.args[v];
            t /= l + 1;
            table[v][l + 1] = t;
        }
    }
    std::vector<Rational> global(total + 1);
    {
        Rational t(1);
        global[0] = t;
        for (long l = 0; l < total; ++l) {
            for (const auto& a : s.global_upper) t *= a + l;
            for (const auto& b : s.global_lower) t /= b + l;
            global[l + 1] = t;
        }
    }

    Rational sum(0);
    for_each_index(bounds, total, [&](const std::vector<long>& l) {
        long tot = 0;
        Rational t(1);
        for (std::size_t v = 0; v < p; ++v) {
            tot += l[v];
            t *= table[v][l[v]];
            if (t == 0) return;
        }
        sum += t * global[tot];
    });
    return sum;
}

Polynomial shifted_factorial_polynomial(const ShiftedFactorial& b) {
    Polynomial r = Polynomial::constant(1);
    for (long k = 0; k < b.order; ++k) {
        if (b.kind == ShiftedFactorial::Kind::NegX)
            r *= Polynomial({Rational(k), Rational(-1)});
        else
            r *= Polynomial({b.shift + k, Rational(1)});
    }
    return r;
}

Polynomial expand_in_monomials(const std::vector<BasisTerm>& terms) {
    Polynomial r;
    for (const auto& t : terms)
        if (t.coeff != 0) r += shifted_factorial_polynomial(t.basis) * t.coeff;
    return r;
}

}  // namespace mop
