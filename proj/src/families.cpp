#include "mop/families.hpp"

#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"
#include "mop/identities.hpp"

#include <cmath>

namespace mop {

namespace {

Rational sdiv(const Rational& num, const Rational& den, const std::string& what) {
    if (den == 0) throw Error(ErrorKind::SingularDenominator, what + " = 0");
    return num / den;
}

void fail(const std::string& msg) { throw Error(ErrorKind::InvalidParams, msg); }

void require_nonempty(std::size_t p, const char* name) {
    if (p == 0) fail(std::string(name) + ": at least one component is required");
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

Rational sign(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// Coefficients c_k of sum_k c_k (-x)_k -> monomials.
Polynomial from_negx(const std::vector<Rational>& by_order) {
    std::vector<BasisTerm> t;
    for (std::size_t k = 0; k < by_order.size(); ++k)
        t.push_back({by_order[k], ShiftedFactorial::neg_x(static_cast<long>(k))});
    return expand_in_monomials(t);
}

Polynomial from_xplus(const Rational& shift, const std::vector<Rational>& by_order) {
    std::vector<BasisTerm> t;
    for (std::size_t k = 0; k < by_order.size(); ++k)
        t.push_back({by_order[k], ShiftedFactorial::x_plus(shift, static_cast<long>(k))});
    return expand_in_monomials(t);
}

long total_of(const std::vector<long>& l) {
    long s = 0;
    for (long v : l) s += v;
    return s;
}

void check_type2_support(const FamilyParams& fp, const MultiIndex& n) {
    if (n.size() != fp.p()) throw Error(ErrorKind::InvalidArgument, "multi-index length differs from p");
    if (fp.finite_support() && n.total() > fp.support_size_N())
        throw Error(ErrorKind::DegreeExceedsSupport,
                    "|n| = " + std::to_string(n.total()) + " exceeds N = " + std::to_string(fp.support_size_N()));
}

// Type II sums of the shape  sum_l G(|l|) prod_i (-n_i)_{l_i} z_i^{l_i} / l_i!  (-x)_{|l|}.
Polynomial negx_kdf(const MultiIndex& n, const std::vector<Rational>& z,
                    const std::function<Rational(long)>& global) {
    std::vector<Rational> by_order(n.total() + 1);
    for_each_index(n.entries(), n.total(), [&](const std::vector<long>& l) {
        Rational t(1);
        for (std::size_t v = 0; v < l.size(); ++v)
            t *= pochhammer(Rational(-n[v]), l[v]) * pow(z[v], l[v]) / factorial(l[v]);
        if (t != 0) by_order[total_of(l)] += t * global(total_of(l));
    });
    return from_negx(by_order);
}

// ---------------------------------------------------------------- type II

Polynomial hahn_type2(const HahnParams& h, const MultiIndex& n) {
    std::vector<Rational> by_order(n.total() + 1);
    for_each_index(n.entries(), n.total(), [&](const std::vector<long>& l) {
        by_order[total_of(l)] += hahn_type2_coefficient(h.alpha, h.beta, h.N, n, l);
    });
    return from_negx(by_order);
}

Polynomial hahn_type2_weighted(const HahnParams& h, const MultiIndex& n) {
    const long tot = n.total();
    Rational pref = sign(tot) / factorial(h.N - tot);
    std::vector<Rational> up{-Rational(tot) - h.beta, Rational(0)}, lo{-Rational(h.N) - h.beta};
    for (std::size_t i = 0; i < n.size(); ++i) {
        pref *= sdiv(pochhammer(h.alpha[i] + 1, n[i]), pochhammer(h.alpha[i] + h.beta + tot + 1, n[i]),
                     "(alpha_i+beta+|n|+1)_{n_i}");
        up.push_back(h.alpha[i] + n[i] + 1);
        lo.push_back(h.alpha[i] + 1);
    }
    std::vector<Rational> xs, ys;
    for (long x = 0; x <= tot; ++x) {
        up[1] = -Rational(x);
        // Gamma(N+beta+1) Gamma(N-x+1) / Gamma(beta+N-x+1) at integer x
        Rational g = pochhammer(h.beta + h.N - x + 1, x) * factorial(h.N - x);
        xs.emplace_back(x);
        ys.push_back(pref * g * eval_pfq_terminating(up, lo, 1));
    }
    return interpolate(xs, ys);
}

Polynomial meixner2_type2(const MeixnerIIParams& m, const MultiIndex& n) {
    const std::size_t p = n.size();
    const Rational& c = m.c;
    Rational pref = pow(c / (c - 1), n.total());
    for (std::size_t j = 0; j < p; ++j) pref *= pochhammer(m.beta[j], n[j]);
    const Rational ratio = (c - 1) / c;

    std::vector<Rational> by_order(n.total() + 1);
    for_each_index(n.entries(), n.total(), [&](const std::vector<long>& l) {
        Rational t(1);
        for (std::size_t j = 0; j < p; ++j) t *= pochhammer(Rational(-n[j]), l[j]) / factorial(l[j]);
        if (t == 0) return;
        for (std::size_t i = 0; i < p; ++i) {
            long tail = 0;
            for (std::size_t j = i; j < p; ++j) tail += l[j];
            if (i + 1 < p) t *= pochhammer(m.beta[i] + n[i], tail - l[i]);
            t = sdiv(t, pochhammer(m.beta[i], tail), "(beta_i)_{tail}");
        }
        const long sl = total_of(l);
        by_order[sl] += t * pow(ratio, sl);
    });
    return from_negx(by_order) * pref;
}

Polynomial meixner2_type2_weighted(const MeixnerIIParams& m, const MultiIndex& n) {
    const std::size_t p = n.size();
    const Rational& c = m.c;
    Rational pref = pow(c / (c - 1), n.total());
    std::vector<Rational> up{Rational(0)}, lo;
    for (std::size_t j = 0; j < p; ++j) {
        pref *= pochhammer(m.beta[j], n[j]);
        up.push_back(m.beta[j] + n[j]);
        lo.push_back(m.beta[j]);
    }
    std::vector<Rational> xs, ys;
    for (long x = 0; x <= n.total(); ++x) {
        up[0] = -Rational(x);
        xs.emplace_back(x);
        ys.push_back(pref * pow(c, -x) * eval_pfq_terminating(up, lo, 1 - c));
    }
    return interpolate(xs, ys);
}

Polynomial meixner1_type2(const MeixnerIParams& m, const MultiIndex& n) {
    Rational pref = pochhammer(m.beta, n.total());
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n.size(); ++i) {
        pref *= pow(m.c[i] / (m.c[i] - 1), n[i]);
        z.push_back((m.c[i] - 1) / m.c[i]);
    }
    const Rational beta = m.beta;
    return negx_kdf(n, z, [&](long s) { return sdiv(Rational(1), pochhammer(beta, s), "(beta)_{|l|}"); }) * pref;
}

Polynomial kravchuk_type2(const KravchukParams& k, const MultiIndex& n) {
    const Rational mN = -Rational(k.N);
    Rational pref = pochhammer(mN, n.total());
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n.size(); ++i) {
        pref *= pow(k.pi[i], n[i]);
        z.push_back(1 / k.pi[i]);
    }
    return negx_kdf(n, z, [&](long s) { return sdiv(Rational(1), pochhammer(mN, s), "(-N)_{|l|}"); }) * pref;
}

Polynomial charlier_type2(const CharlierParams& c, const MultiIndex& n) {
    Rational pref(1);
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n.size(); ++i) {
        pref *= pow(-c.a[i], n[i]);
        z.push_back(-1 / c.a[i]);
    }
    return negx_kdf(n, z, [](long) { return Rational(1); }) * pref;
}

// ---------------------------------------------------------------- type I

// Index list of the other components.
std::vector<std::size_t> others(std::size_t p, std::size_t i) {
    std::vector<std::size_t> o;
    for (std::size_t q = 0; q < p; ++q)
        if (q != i) o.push_back(q);
    return o;
}

// sum over (l_x, l_q...) with |l| <= n_i - 1 of
//   G(|l|) * basis(l_x) * zx^{l_x} / l_x! * prod_q (n_q)_{l_q} zq^{l_q} / l_q!
// collecting coefficients of basis(l_x).
std::vector<Rational> type1_kdf(const MultiIndex& n, std::size_t i, const Rational& zx,
                                const std::vector<Rational>& zq, const std::function<Rational(long)>& global) {
    const long top = n[i] - 1;
    const auto oth = others(n.size(), i);
    std::vector<long> bounds(oth.size() + 1, top);
    std::vector<Rational> by_order(top + 1);
    for_each_index(bounds, top, [&](const std::vector<long>& l) {
        Rational t = pow(zx, l[0]) / factorial(l[0]);
        for (std::size_t v = 0; v < oth.size(); ++v)
            t *= pochhammer(Rational(n[oth[v]]), l[v + 1]) * pow(zq[v], l[v + 1]) / factorial(l[v + 1]);
        const long s = total_of(l);
        by_order[l[0]] += t * pochhammer(Rational(-top), s) * global(s);
    });
    return by_order;
}

PrefactoredPolynomial hahn_type1(const HahnParams& h, const MultiIndex& n, std::size_t i) {
    const long tot = n.total();
    const std::size_t p = n.size();
    if (tot > h.N + 1) throw Error(ErrorKind::DegreeExceedsSupport, "|n| exceeds N+1");
    const Rational& ai = h.alpha[i];
    const Rational& b = h.beta;
    Rational K = sign(tot - 1) * factorial(h.N + 1 - tot);
    K = sdiv(K, factorial(n[i] - 1) * pochhammer(b + 1, tot - 1) * pochhammer(ai + b + tot, h.N + 2 - tot),
             "(beta+1)_{|n|-1} (alpha_i+beta+|n|)_{N+2-|n|}");
    for (std::size_t k = 0; k < p; ++k) {
        K *= pochhammer(h.alpha[k] + b + tot, n[k]);
        if (k != i) K = sdiv(K, pochhammer(h.alpha[k] - ai, n[k]), "(alpha_k-alpha_i)_{n_k}");
    }
    std::vector<Rational> by_order(n[i]);
    for (long l = 0; l < n[i]; ++l) {
        Rational t = pochhammer(Rational(-n[i] + 1), l) * pochhammer(ai + b + tot, l);
        t = sdiv(t, factorial(l) * pochhammer(ai + 1, l) * pochhammer(ai + b + h.N + 2, l), "type I Hahn term");
        for (std::size_t k = 0; k < p; ++k) {
            if (k == i) continue;
            t *= sdiv(pochhammer(ai - h.alpha[k] - n[k] + 1, l), pochhammer(ai - h.alpha[k] + 1, l),
                      "(alpha_i-alpha_k+1)_l");
        }
        by_order[l] = K * t;
    }
    return {PrefactorToken::one(), from_xplus(ai + 1, by_order)};
}

PrefactoredPolynomial meixner2_type1(const MeixnerIIParams& m, const MultiIndex& n, std::size_t i) {
    const long tot = n.total();
    const std::size_t p = n.size();
    const Rational& bi = m.beta[i];
    const Rational& c = m.c;
    Rational K = sign(tot - 1);
    Rational den = pow(c, tot - 1) * factorial(n[i] - 1);
    for (std::size_t k = 0; k < p; ++k)
        if (k != i) den *= pochhammer(m.beta[k] - bi, n[k]);
    K = sdiv(K, den, "(beta_k-beta_i)_{n_k}");

    std::vector<Rational> by_order(n[i]);
    for (long l = 0; l < n[i]; ++l) {
        Rational t = pochhammer(Rational(-n[i] + 1), l) * pow(1 - c, l) / factorial(l);
        t = sdiv(t, pochhammer(bi, l), "(beta_i)_l");
        for (std::size_t k = 0; k < p; ++k) {
            if (k == i) continue;
            t *= sdiv(pochhammer(bi + 1 - m.beta[k] - n[k], l), pochhammer(bi + 1 - m.beta[k], l),
                      "(beta_i+1-beta_k)_l");
        }
        by_order[l] = K * t;
    }
    return {PrefactorToken::pow_one_minus_c(1 - c, bi + tot - 1), from_xplus(bi, by_order)};
}

PrefactoredPolynomial meixner1_type1(const MeixnerIParams& m, const MultiIndex& n, std::size_t i, Type1Form form) {
    const long tot = n.total();
    const std::size_t p = n.size();
    const Rational& ci = m.c[i];
    const Rational& b = m.beta;
    const int comp = static_cast<int>(i) + 1;
    const auto oth = others(p, i);

    if (form == Type1Form::Derivation) {
        Rational K = sdiv(Rational(1), factorial(n[i] - 1) * pochhammer(b, tot - 1) * pow(ci, n[i] - 1), "(beta)_{|n|-1}");
        for (std::size_t q = 0; q < p; ++q) {
            K *= pow(1 - m.c[q], n[q]);
            if (q != i) K = sdiv(K, pow(ci - m.c[q], n[q]), "c_i-c_q");
        }
        // k-vector in component order; k_i carries the (-beta-|n|+2) factor.
        std::vector<long> bounds(p, n[i] - 1);
        std::vector<Rational> by_order(n[i]);
        for_each_index(bounds, n[i] - 1, [&](const std::vector<long>& k) {
            const long s = total_of(k);
            Rational t = pochhammer(Rational(-n[i] + 1), s);
            for (std::size_t q = 0; q < p; ++q) t /= factorial(k[q]);
            t *= pochhammer(-b - tot + 2, k[i]) / pow(ci - 1, k[i]);
            for (std::size_t q : oth)
                t *= pow(m.c[q], k[q]) * pochhammer(Rational(n[q]), k[q]) / pow(ci - m.c[q], k[q]);
            by_order[n[i] - 1 - s] += K * t;
        });
        return {PrefactorToken::pow_one_minus_ci(comp, 1 - ci, b + tot - 2), from_xplus(b, by_order)};
    }

    Rational K = sign(n[i] - 1);
    Rational den = factorial(n[i] - 1) * pochhammer(b, tot - n[i]);
    if (form == Type1Form::Printed) den *= pow(ci, n[i] - 1);
    K = sdiv(K, den, "(beta)_{|n|-n_i}");
    for (std::size_t q : oth) K *= pow(sdiv(1 - m.c[q], ci - m.c[q], "c_i-c_q"), n[q]);
    auto global = [&](long s) { return sdiv(Rational(1), pochhammer(b + tot - n[i], s), "(beta+|n|-n_i)_s"); };

    std::vector<Rational> zq;
    PrefactorToken tok = PrefactorToken::pow_one_minus_ci(comp, 1 - ci, b + tot - 1);
    if (form == Type1Form::Printed) {
        for (std::size_t q : oth) zq.push_back((1 - ci) * m.c[q] / (m.c[q] - ci));
        auto by_order = type1_kdf(n, i, 1 - ci, zq, global);
        for (auto& v : by_order) v *= K;
        return {tok, from_xplus(b, by_order)};
    }
    for (std::size_t q : oth) zq.push_back((ci - 1) / (ci - m.c[q]));
    auto by_order = type1_kdf(n, i, (ci - 1) / ci, zq, global);
    for (auto& v : by_order) v *= K;
    return {tok, from_negx(by_order)};
}

PrefactoredPolynomial kravchuk_type1(const KravchukParams& k, const MultiIndex& n, std::size_t i, Type1Form form) {
    const long tot = n.total();
    const std::size_t p = n.size();
    if (tot > k.N + 1) throw Error(ErrorKind::DegreeExceedsSupport, "|n| exceeds N+1");
    const Rational& pi = k.pi[i];
    const Rational mN = -Rational(k.N);
    const auto oth = others(p, i);

    if (form == Type1Form::Derivation) {
        Rational K = sdiv(Rational(1),
                          factorial(n[i] - 1) * pochhammer(mN, tot - 1) * pow(pi, n[i] - 1) * pow(1 - pi, n[i] - 1),
                          "(-N)_{|n|-1}");
        for (std::size_t q : oth) K = sdiv(K, pow(k.pi[q] - pi, n[q]), "pi_q-pi_i");
        std::vector<long> bounds(p, n[i] - 1);
        std::vector<Rational> by_order(n[i]);
        for_each_index(bounds, n[i] - 1, [&](const std::vector<long>& kk) {
            const long s = total_of(kk);
            Rational t = pochhammer(Rational(-n[i] + 1), s) * pow(-pi, s);
            for (std::size_t q = 0; q < p; ++q) t /= factorial(kk[q]);
            t *= pochhammer(Rational(k.N - tot + 2), kk[i]);
            for (std::size_t q : oth)
                t *= pochhammer(Rational(n[q]), kk[q]) * pow((1 - k.pi[q]) / (pi - k.pi[q]), kk[q]);
            by_order[n[i] - 1 - s] += K * t;
        });
        return {PrefactorToken::one(), from_negx(by_order)};
    }

    Rational K = sdiv(sign(n[i] - 1), factorial(n[i] - 1) * pochhammer(mN, tot - n[i]) * pow(1 - pi, n[i] - 1),
                      "(-N)_{|n|-n_i}");
    std::vector<Rational> zq;
    for (std::size_t q : oth) {
        K = sdiv(K, pow(k.pi[q] - pi, n[q]), "pi_q-pi_i");
        zq.push_back((1 - k.pi[q]) / (pi - k.pi[q]));
    }
    const Rational low = mN + tot - n[i];
    auto by_order = type1_kdf(n, i, 1 / pi, zq,
                              [&](long s) { return sdiv(Rational(1), pochhammer(low, s), "(-N+|n|-n_i)_s"); });
    for (auto& v : by_order) v *= K;
    return {PrefactorToken::one(), from_negx(by_order)};
}

PrefactoredPolynomial charlier_type1(const CharlierParams& c, const MultiIndex& n, std::size_t i) {
    const std::size_t p = n.size();
    const Rational& ai = c.a[i];
    Rational K = sdiv(sign(n[i] - 1), factorial(n[i] - 1), "(n_i-1)!");
    std::vector<Rational> zq;
    for (std::size_t q : others(p, i)) {
        K = sdiv(K, pow(ai - c.a[q], n[q]), "a_i-a_q");
        zq.push_back(1 / (c.a[q] - ai));
    }
    auto by_order = type1_kdf(n, i, -1 / ai, zq, [](long) { return Rational(1); });
    for (auto& v : by_order) v *= K;
    return {PrefactorToken::exp_neg(static_cast<int>(i) + 1, ai), from_negx(by_order)};
}

// ---------------------------------------------------------------- recurrences

RecurrenceCoefficients hahn_nnrc(const HahnParams& h, const MultiIndex& n, const Permutation& perm) {
    const std::size_t p = n.size();
    const long tot = n.total();
    const auto& al = h.alpha;
    const Rational& b = h.beta;
    const long N = h.N;
    RecurrenceCoefficients r{{}, {}, perm};

    for (std::size_t k = 0; k < p; ++k) {
        Rational prod = sdiv(al[k] + b + n[k] + N + 2, al[k] + b + n[k] + tot + 2, "alpha_k+beta+n_k+|n|+2");
        for (std::size_t q = 0; q < p; ++q)
            prod *= sdiv(al[k] - al[q] + n[k] + 1, al[k] - al[q] + n[k] + 1 - n[q],
                         "alpha_" + idx(k) + "-alpha_" + idx(q) + "+n_k+1-n_q");
        Rational v = (al[k] + n[k] + 1) * (prod - 1);
        Rational sum(0);
        for (std::size_t i = 0; i < p; ++i) {
            Rational t = (al[i] + n[i]) * (al[i] + b + n[i] + N + 1);
            t = sdiv(t, (al[i] - al[k] - n[k] - 1 + n[i]) * pochhammer(al[i] + b + n[i] + tot, 2),
                     "alpha_" + idx(i) + "-alpha_" + idx(k) + "-n_k-1+n_i");
            for (std::size_t q = 0; q < p; ++q) {
                t *= al[i] - al[q] + n[i];
                if (q != i)
                    t = sdiv(t, al[i] - al[q] - n[q] + n[i], "alpha_" + idx(i) + "-alpha_" + idx(q) + "-n_q+n_i");
            }
            sum += t;
        }
        r.b0.push_back(v + (al[k] + b + n[k] + tot + 1) * sum);
    }

    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const StepSets ss = step_sets(perm, j);
        Rational pre = pochhammer(Rational(N - tot + 1), j) * pochhammer(b + 1 + tot - j, j);
        for (int q1 : ss.S_complement) {
            const std::size_t q = q1 - 1;
            pre = sdiv(pre, al[q] + b + tot - j + n[q], "alpha_q+beta+|n|-j+n_q");
        }
        for (std::size_t q = 0; q < p; ++q)
            pre *= sdiv(pochhammer(al[q] + b + tot - j + 1, n[q]), pochhammer(al[q] + b + tot + 1, n[q]),
                        "(alpha_q+beta+|n|+1)_{n_q}");
        Rational sum(0);
        for (int i1 : ss.S) {
            const std::size_t i = i1 - 1;
            Rational t = (al[i] + n[i]) * (al[i] + b + n[i] + N + 1);
            t = sdiv(t, pochhammer(al[i] + b + n[i] + tot - j, j + 2), "(alpha_i+beta+n_i+|n|-j)_{j+2}");
            for (std::size_t q = 0; q < p; ++q) t *= al[i] - al[q] + n[i];
            for (int q1 : ss.S) {
                const std::size_t q = q1 - 1;
                if (q != i)
                    t = sdiv(t, al[i] - al[q] - n[q] + n[i], "alpha_" + idx(i) + "-alpha_" + idx(q) + "-n_q+n_i");
            }
            sum += t;
        }
        r.bj.push_back(pre * sum);
    }
    return r;
}

RecurrenceCoefficients meixner2_nnrc(const MeixnerIIParams& m, const MultiIndex& n, const Permutation& perm) {
    const std::size_t p = n.size();
    const auto& be = m.beta;
    const Rational& c = m.c;
    const Rational inv = 1 / (1 - c);
    RecurrenceCoefficients r{{}, {}, perm};
    for (std::size_t k = 0; k < p; ++k) {
        Rational prod(1);
        for (std::size_t q = 0; q < p; ++q)
            prod *= sdiv(be[k] - be[q] + n[k] + 1, be[k] - be[q] + n[k] + 1 - n[q],
                         "beta_" + idx(k) + "-beta_" + idx(q) + "+n_k+1-n_q");
        Rational v = (be[k] + n[k]) * (inv * prod - 1);
        Rational sum(0);
        for (std::size_t i = 0; i < p; ++i) {
            Rational t = sdiv(be[i] + n[i] - 1, be[i] - be[k] - n[k] - 1 + n[i],
                              "beta_" + idx(i) + "-beta_" + idx(k) + "-n_k-1+n_i");
            for (std::size_t q = 0; q < p; ++q) {
                t *= be[i] - be[q] + n[i];
                if (q != i) t = sdiv(t, be[i] - be[q] - n[q] + n[i], "beta_" + idx(i) + "-beta_" + idx(q) + "-n_q+n_i");
            }
            sum += t;
        }
        r.b0.push_back(v + inv * sum);
    }
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const StepSets ss = step_sets(perm, j);
        Rational sum(0);
        for (int i1 : ss.S) {
            const std::size_t i = i1 - 1;
            Rational t = be[i] + n[i] - 1;
            for (std::size_t q = 0; q < p; ++q) t *= be[i] - be[q] + n[i];
            for (int q1 : ss.S) {
                const std::size_t q = q1 - 1;
                if (q != i) t = sdiv(t, be[i] - be[q] - n[q] + n[i], "beta_" + idx(i) + "-beta_" + idx(q) + "-n_q+n_i");
            }
            sum += t;
        }
        r.bj.push_back(pow(c, j) * pow(inv, j + 1) * sum);
    }
    return r;
}

RecurrenceCoefficients meixner1_nnrc(const MeixnerIParams& m, const MultiIndex& n, const Permutation& perm) {
    const std::size_t p = n.size();
    const long tot = n.total();
    RecurrenceCoefficients r{{}, {}, perm};
    Rational s(0);
    for (std::size_t i = 0; i < p; ++i) s += sdiv(Rational(n[i]), 1 - m.c[i], "1-c_i");
    for (std::size_t k = 0; k < p; ++k) r.b0.push_back((m.beta + tot) * m.c[k] / (1 - m.c[k]) + s);
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const StepSets ss = step_sets(perm, j);
        Rational sum(0);
        for (int i1 : ss.S) {
            const std::size_t i = i1 - 1;
            Rational t = n[i] * m.c[i] / pow(1 - m.c[i], j + 1);
            for (int q1 : ss.S_complement) t *= (m.c[i] - m.c[q1 - 1]) / (1 - m.c[q1 - 1]);
            sum += t;
        }
        r.bj.push_back(pochhammer(m.beta + tot - j, j) * sum);
    }
    return r;
}

RecurrenceCoefficients kravchuk_nnrc(const KravchukParams& k, const MultiIndex& n, const Permutation& perm) {
    const std::size_t p = n.size();
    const long tot = n.total();
    RecurrenceCoefficients r{{}, {}, perm};
    Rational s(0);
    for (std::size_t i = 0; i < p; ++i) s += n[i] * (1 - k.pi[i]);
    for (std::size_t q = 0; q < p; ++q) r.b0.push_back(Rational(k.N - tot) * k.pi[q] + s);
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const StepSets ss = step_sets(perm, j);
        Rational sum(0);
        for (int i1 : ss.S) {
            const std::size_t i = i1 - 1;
            Rational t = n[i] * k.pi[i] * (1 - k.pi[i]);
            for (int q1 : ss.S_complement) t *= k.pi[i] - k.pi[q1 - 1];
            sum += t;
        }
        r.bj.push_back(pochhammer(Rational(k.N - tot + 1), j) * sum);
    }
    return r;
}

RecurrenceCoefficients charlier_nnrc(const CharlierParams& c, const MultiIndex& n, const Permutation& perm) {
    const std::size_t p = n.size();
    RecurrenceCoefficients r{{}, {}, perm};
    for (std::size_t k = 0; k < p; ++k) r.b0.push_back(c.a[k] + n.total());
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const StepSets ss = step_sets(perm, j);
        Rational sum(0);
        for (int i1 : ss.S) {
            const std::size_t i = i1 - 1;
            Rational t = n[i] * c.a[i];
            for (int q1 : ss.S_complement) t *= c.a[i] - c.a[q1 - 1];
            sum += t;
        }
        r.bj.push_back(sum);
    }
    return r;
}

template <class F>
void for_pairs(std::size_t p, F&& f) {
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) f(i, j);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::Hahn: return "hahn";
    case Family::MeixnerII: return "meixner2";
    case Family::MeixnerI: return "meixner1";
    case Family::Kravchuk: return "kravchuk";
    case Family::Charlier: return "charlier";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "hahn") return Family::Hahn;
    if (s == "meixner2" || s == "meixner-ii" || s == "meixner_ii") return Family::MeixnerII;
    if (s == "meixner1" || s == "meixner-i" || s == "meixner_i") return Family::MeixnerI;
    if (s == "kravchuk") return Family::Kravchuk;
    if (s == "charlier") return Family::Charlier;
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + s + "'");
}

void validate(const ParamVariant& v) {
    std::visit(
        [](const auto& P) {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, HahnParams>) {
                require_nonempty(P.alpha.size(), "hahn");
                if (P.N < 0) fail("hahn: N must be non-negative");
                if (P.beta <= -1) fail("hahn: beta must exceed -1");
                for (std::size_t i = 0; i < P.alpha.size(); ++i)
                    if (P.alpha[i] <= -1) fail("hahn: alpha_" + idx(i) + " must exceed -1");
                for_pairs(P.alpha.size(), [&](std::size_t i, std::size_t j) {
                    if (is_integer(P.alpha[i] - P.alpha[j]))
                        fail("hahn: alpha_" + idx(i) + " - alpha_" + idx(j) + " is an integer (AT condition)");
                });
            } else if constexpr (std::is_same_v<T, MeixnerIIParams>) {
                require_nonempty(P.beta.size(), "meixner2");
                if (P.c <= 0 || P.c >= 1) fail("meixner2: c must lie in (0,1)");
                for (std::size_t i = 0; i < P.beta.size(); ++i)
                    if (P.beta[i] <= 0) fail("meixner2: beta_" + idx(i) + " must be positive");
                for_pairs(P.beta.size(), [&](std::size_t i, std::size_t j) {
                    if (is_integer(P.beta[i] - P.beta[j]))
                        fail("meixner2: beta_" + idx(i) + " - beta_" + idx(j) + " is an integer (AT condition)");
                });
            } else if constexpr (std::is_same_v<T, MeixnerIParams>) {
                require_nonempty(P.c.size(), "meixner1");
                if (P.beta <= 0) fail("meixner1: beta must be positive");
                for (std::size_t i = 0; i < P.c.size(); ++i)
                    if (P.c[i] <= 0 || P.c[i] >= 1) fail("meixner1: c_" + idx(i) + " must lie in (0,1)");
                for_pairs(P.c.size(), [&](std::size_t i, std::size_t j) {
                    if (P.c[i] == P.c[j]) fail("meixner1: c_" + idx(i) + " = c_" + idx(j) + " (AT condition)");
                });
            } else if constexpr (std::is_same_v<T, KravchukParams>) {
                require_nonempty(P.pi.size(), "kravchuk");
                if (P.N < 0) fail("kravchuk: N must be non-negative");
                for (std::size_t i = 0; i < P.pi.size(); ++i)
                    if (P.pi[i] <= 0 || P.pi[i] >= 1) fail("kravchuk: pi_" + idx(i) + " must lie in (0,1)");
                for_pairs(P.pi.size(), [&](std::size_t i, std::size_t j) {
                    if (P.pi[i] == P.pi[j]) fail("kravchuk: pi_" + idx(i) + " = pi_" + idx(j) + " (AT condition)");
                });
            } else {
                require_nonempty(P.a.size(), "charlier");
                for (std::size_t i = 0; i < P.a.size(); ++i)
                    if (P.a[i] <= 0) fail("charlier: a_" + idx(i) + " must be positive");
                for_pairs(P.a.size(), [&](std::size_t i, std::size_t j) {
                    if (P.a[i] == P.a[j]) fail("charlier: a_" + idx(i) + " = a_" + idx(j) + " (AT condition)");
                });
            }
        },
        v);
}

FamilyParams FamilyParams::make(ParamVariant v) {
    validate(v);
    return FamilyParams(std::move(v));
}

FamilyParams FamilyParams::unchecked(ParamVariant v) { return FamilyParams(std::move(v)); }

std::size_t FamilyParams::p() const {
    return std::visit(
        [](const auto& P) -> std::size_t {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, HahnParams>) return P.alpha.size();
            else if constexpr (std::is_same_v<T, MeixnerIIParams>) return P.beta.size();
            else if constexpr (std::is_same_v<T, MeixnerIParams>) return P.c.size();
            else if constexpr (std::is_same_v<T, KravchukParams>) return P.pi.size();
            else return P.a.size();
        },
        v_);
}

bool FamilyParams::finite_support() const { return family() == Family::Hahn || family() == Family::Kravchuk; }

long FamilyParams::support_size_N() const {
    if (family() == Family::Hahn) return as<HahnParams>().N;
    if (family() == Family::Kravchuk) return as<KravchukParams>().N;
    return -1;
}

long double PrefactorToken::value() const {
    switch (kind) {
    case Kind::One: return 1.0L;
    case Kind::ExpNeg: return std::exp(-static_cast<long double>(base.get_d()));
    case Kind::PowOneMinusC:
    case Kind::PowOneMinusCi: {
        // long double conversion through num/den keeps more digits than get_d
        long double b = static_cast<long double>(base.get_num().get_d()) / base.get_den().get_d();
        long double e = static_cast<long double>(exponent.get_num().get_d()) / exponent.get_den().get_d();
        return std::pow(b, e);
    }
    }
    return 1.0L;
}

std::string PrefactorToken::str() const {
    switch (kind) {
    case Kind::One: return "1";
    case Kind::ExpNeg: return "exp(-" + to_string(base) + ")";
    case Kind::PowOneMinusC: return "(1-c)^(" + to_string(exponent) + ")";
    case Kind::PowOneMinusCi: return "(1-c_" + std::to_string(index) + ")^(" + to_string(exponent) + ")";
    }
    return "?";
}

Rational token_ratio(const PrefactorToken& num, const PrefactorToken& den) {
    using K = PrefactorToken::Kind;
    if (num.kind == K::One && den.kind == K::One) return 1;
    if (num.kind != den.kind || num.base != den.base)
        throw Error(ErrorKind::InvalidArgument, num.str() + " / " + den.str() + " is not rational");
    if (num.kind == K::ExpNeg) return 1;
    Rational d = num.exponent - den.exponent;
    if (!is_integer(d)) throw Error(ErrorKind::InvalidArgument, num.str() + " / " + den.str() + " is not rational");
    return pow(num.base, d.get_num().get_si());
}

long double PrefactoredPolynomial::value(long double x) const {
    long double r = 0;
    const auto& c = rational_part.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + static_cast<long double>(it->get_d());
    return prefactor.value() * r;
}

Rational weight(const FamilyParams& fp, std::size_t i, long x) {
    if (i >= fp.p()) throw Error(ErrorKind::InvalidArgument, "component index out of range");
    if (x < 0 || (fp.finite_support() && x > fp.support_size_N()))
        throw Error(ErrorKind::OutOfSupport, "x = " + std::to_string(x) + " is outside the support");
    return std::visit(
        [&](const auto& P) -> Rational {
            using T = std::decay_t<decltype(P)>;
            if constexpr (std::is_same_v<T, HahnParams>)
                return pochhammer(P.alpha[i] + 1, x) / factorial(x) * pochhammer(P.beta + 1, P.N - x) / factorial(P.N - x);
            else if constexpr (std::is_same_v<T, MeixnerIIParams>)
                return pochhammer(P.beta[i], x) / factorial(x) * pow(P.c, x);
            else if constexpr (std::is_same_v<T, MeixnerIParams>)
                return pochhammer(P.beta, x) / factorial(x) * pow(P.c[i], x);
            else if constexpr (std::is_same_v<T, KravchukParams>)
                return binomial(P.N, x) * pow(P.pi[i], x) * pow(1 - P.pi[i], P.N - x);
            else
                return pow(P.a[i], x) / factorial(x);
        },
        fp.value());
}

MassToken weight_mass_token(const FamilyParams& fp, std::size_t i) {
    switch (fp.family()) {
    case Family::Hahn: {
        Rational m(0);
        for (long x = 0; x <= fp.support_size_N(); ++x) m += weight(fp, i, x);
        return {PrefactorToken::one(), m};
    }
    case Family::Kravchuk: return {PrefactorToken::one(), 1};
    case Family::Charlier: {
        const auto& P = fp.as<CharlierParams>();
        return {PrefactorToken::exp_neg(static_cast<int>(i) + 1, P.a[i]), 1};
    }
    case Family::MeixnerII: {
        const auto& P = fp.as<MeixnerIIParams>();
        return {PrefactorToken::pow_one_minus_c(1 - P.c, P.beta[i]), 1};
    }
    case Family::MeixnerI: {
        const auto& P = fp.as<MeixnerIParams>();
        return {PrefactorToken::pow_one_minus_ci(static_cast<int>(i) + 1, 1 - P.c[i], P.beta), 1};
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

Polynomial type2(const FamilyParams& fp, const MultiIndex& n, Type2Representation rep) {
    check_type2_support(fp, n);
    if (rep == Type2Representation::WeightedPfq) {
        if (fp.family() == Family::Hahn) return hahn_type2_weighted(fp.as<HahnParams>(), n);
        if (fp.family() == Family::MeixnerII) return meixner2_type2_weighted(fp.as<MeixnerIIParams>(), n);
        throw Error(ErrorKind::UnsupportedRepresentation,
                    std::string("weighted_pfq is not available for ") + family_name(fp.family()));
    }
    switch (fp.family()) {
    case Family::Hahn: return hahn_type2(fp.as<HahnParams>(), n);
    case Family::MeixnerII: return meixner2_type2(fp.as<MeixnerIIParams>(), n);
    case Family::MeixnerI: return meixner1_type2(fp.as<MeixnerIParams>(), n);
    case Family::Kravchuk: return kravchuk_type2(fp.as<KravchukParams>(), n);
    case Family::Charlier: return charlier_type2(fp.as<CharlierParams>(), n);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

PrefactoredPolynomial type1(const FamilyParams& fp, const MultiIndex& n, std::size_t i, Type1Form form) {
    if (n.size() != fp.p()) throw Error(ErrorKind::InvalidArgument, "multi-index length differs from p");
    if (i >= fp.p()) throw Error(ErrorKind::InvalidArgument, "component index out of range");
    if (n[i] == 0) return {PrefactorToken::one(), Polynomial()};
    if (form == Type1Form::Alternative && fp.family() != Family::MeixnerI)
        throw Error(ErrorKind::UnsupportedRepresentation, "the alternative type I form exists for meixner1 only");
    if (form == Type1Form::Derivation && fp.family() != Family::MeixnerI && fp.family() != Family::Kravchuk)
        throw Error(ErrorKind::UnsupportedRepresentation, "the derivation form exists for meixner1 and kravchuk only");
    switch (fp.family()) {
    case Family::Hahn: return hahn_type1(fp.as<HahnParams>(), n, i);
    case Family::MeixnerII: return meixner2_type1(fp.as<MeixnerIIParams>(), n, i);
    case Family::MeixnerI: return meixner1_type1(fp.as<MeixnerIParams>(), n, i, form);
    case Family::Kravchuk: return kravchuk_type1(fp.as<KravchukParams>(), n, i, form);
    case Family::Charlier: return charlier_type1(fp.as<CharlierParams>(), n, i);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

bool type1_alt_equivalence(const FamilyParams& fp, const MultiIndex& n, std::size_t i) {
    if (fp.family() != Family::MeixnerI) throw Error(ErrorKind::UnsupportedRepresentation, "meixner1 only");
    auto a = type1(fp, n, i, Type1Form::Printed);
    auto b = type1(fp, n, i, Type1Form::Alternative);
    if (a.rational_part.is_zero() || b.rational_part.is_zero()) return a.rational_part == b.rational_part;
    return a.rational_part * token_ratio(a.prefactor, b.prefactor) == b.rational_part;
}

Polynomial mass_normalized(const FamilyParams& fp, std::size_t i, const PrefactoredPolynomial& a) {
    if (a.rational_part.is_zero()) return {};
    MassToken m = weight_mass_token(fp, i);
    return a.rational_part * (token_ratio(a.prefactor, m.token) * m.rational_factor);
}

LinearFormValue linear_form(const FamilyParams& fp, const MultiIndex& n, long x) {
    LinearFormValue out;
    out.exact = fp.finite_support();
    out.exact_value = 0;
    for (std::size_t i = 0; i < fp.p(); ++i) {
        Rational w = weight(fp, i, x);
        auto a = type1(fp, n, i);
        if (out.exact) out.exact_value += a.rational_part(Rational(x)) * w;
        out.value += a.value(static_cast<long double>(x)) * static_cast<long double>(w.get_d());
        out.components.push_back(std::move(a));
        out.weights.push_back(w);
    }
    if (out.exact) out.value = static_cast<long double>(out.exact_value.get_d());
    return out;
}

RecurrenceCoefficients nnrc(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm) {
    if (n.size() != fp.p() || perm.size() != fp.p())
        throw Error(ErrorKind::InvalidArgument, "multi-index / permutation length differs from p");
    switch (fp.family()) {
    case Family::Hahn: return hahn_nnrc(fp.as<HahnParams>(), n, perm);
    case Family::MeixnerII: return meixner2_nnrc(fp.as<MeixnerIIParams>(), n, perm);
    case Family::MeixnerI: return meixner1_nnrc(fp.as<MeixnerIParams>(), n, perm);
    case Family::Kravchuk: return kravchuk_nnrc(fp.as<KravchukParams>(), n, perm);
    case Family::Charlier: return charlier_nnrc(fp.as<CharlierParams>(), n, perm);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family");
}

}  // namespace mop
