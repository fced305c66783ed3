#include "mop/identities.hpp"

#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"

namespace mop {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
    if (den == 0) throw Error(ErrorKind::PoleInParams, std::string(what) + " vanishes");
    return num / den;
}

Rational pfq_or_pole(const std::vector<Rational>& up, const std::vector<Rational>& lo, const Rational& z) {
    try {
        return eval_pfq_terminating(up, lo, z);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::LowerParamPole) throw Error(ErrorKind::PoleInParams, e.what());
        throw;
    }
}

void require_lemma_shape(const IdentityParams& p) {
    if (p.alpha.empty() || p.alpha.size() != p.nvec.size())
        throw Error(ErrorKind::InvalidArgument, "alpha and n must have the same positive length");
}

IdentityReport hahn_lemma(const IdentityParams& P, bool second) {
    require_lemma_shape(P);
    const MultiIndex n(P.nvec);
    const long tot = n.total();
    const Rational& x = P.x;
    const Rational& beta = P.beta;
    const Rational shift = second ? Rational(2) : Rational(1);

    Rational lhs(0);
    for_each_index(n.entries(), tot, [&](const std::vector<long>& l) {
        long sl = 0;
        for (long v : l) sl += v;
        Rational t = pochhammer(-Rational(P.N), sl) * pochhammer(x, sl);
        t = checked_div(t, pochhammer(x + beta + shift, sl), "(x+beta+shift)_{|l|}");
        lhs += t * hahn_type2_coefficient(P.alpha, beta, P.N, n, l);
    });

    Rational prod_up(1), prod_down(1), prod_same(1);
    for (std::size_t q = 0; q < n.size(); ++q) {
        prod_up *= pochhammer(P.alpha[q] - x + 1, n[q]);
        prod_same *= pochhammer(P.alpha[q] - x, n[q]);
        prod_down *= pochhammer(P.alpha[q] + beta + tot + 1, n[q]);
    }
    Rational rhs;
    if (!second) {
        rhs = pochhammer(beta + 1, tot) * pochhammer(-Rational(P.N), tot);
        rhs = checked_div(rhs, pochhammer(x + beta + 1, tot) * prod_down, "lemma denominator");
        rhs *= prod_up;
    } else {
        if (tot == 0) {
            // (beta+2)_{-1} = 1/(beta+1); the bracket reduces to beta+1, so the right side is 1.
            rhs = 1;
        } else {
            rhs = pochhammer(beta + 2, tot - 1) * pochhammer(-Rational(P.N), tot);
            rhs = checked_div(rhs, pochhammer(x + beta + 2, tot) * prod_down, "lemma denominator");
            rhs *= (x + beta + tot + 1) * prod_up - x * prod_same;
        }
    }
    return {lhs, rhs, lhs == rhs};
}

IdentityReport lemma3(const IdentityParams& P) {
    require_lemma_shape(P);
    const std::size_t p = P.alpha.size();
    Rational lhs(0);
    for (std::size_t l = 0; l < p; ++l) {
        Rational t = checked_div(Rational(P.nvec[l]), P.alpha[l] - P.x, "alpha_l - x");
        for (std::size_t q = 0; q < l; ++q) t *= pochhammer(P.alpha[q] - P.x + 1, P.nvec[q]);
        for (std::size_t q = l; q < p; ++q) t *= pochhammer(P.alpha[q] - P.x, P.nvec[q]);
        lhs += t;
    }
    Rational a(1), b(1);
    for (std::size_t q = 0; q < p; ++q) {
        a *= pochhammer(P.alpha[q] - P.x + 1, P.nvec[q]);
        b *= pochhammer(P.alpha[q] - P.x, P.nvec[q]);
    }
    Rational rhs = a - b;
    return {lhs, rhs, lhs == rhs};
}

}  // namespace

IdentityKind parse_identity_kind(const std::string& s) {
    if (s == "chu_vandermonde" || s == "chu-vandermonde") return IdentityKind::ChuVandermonde;
    if (s == "gauss") return IdentityKind::Gauss;
    if (s == "pfaff_saalschutz" || s == "pfaff-saalschutz") return IdentityKind::PfaffSaalschutz;
    if (s == "lemma1") return IdentityKind::Lemma1;
    if (s == "lemma2") return IdentityKind::Lemma2;
    if (s == "lemma3") return IdentityKind::Lemma3;
    throw Error(ErrorKind::InvalidArgument, "unknown identity '" + s + "'");
}

const char* identity_name(IdentityKind k) {
    switch (k) {
    case IdentityKind::ChuVandermonde: return "chu_vandermonde";
    case IdentityKind::Gauss: return "gauss";
    case IdentityKind::PfaffSaalschutz: return "pfaff_saalschutz";
    case IdentityKind::Lemma1: return "lemma1";
    case IdentityKind::Lemma2: return "lemma2";
    case IdentityKind::Lemma3: return "lemma3";
    }
    return "?";
}

Rational hahn_type2_coefficient(const std::vector<Rational>& alpha, const Rational& beta, long N,
                                const MultiIndex& n, const std::vector<long>& l) {
    const std::size_t p = alpha.size();
    const long tot = n.total();
    long sl = 0;
    for (long v : l) sl += v;
    const Rational mN = -Rational(N);

    Rational c = checked_div(pochhammer(mN, tot), pochhammer(mN, sl), "(-N)_{|l|}");
    long partial_n = 0;
    for (std::size_t i = 0; i < p; ++i) {
        partial_n += n[i];
        long tail = 0;  // sum_{j>=i} l_j
        for (std::size_t j = i; j < p; ++j) tail += l[j];
        const Rational top = alpha[i] + beta + partial_n + 1;
        c *= checked_div(pochhammer(alpha[i] + 1, n[i]), pochhammer(alpha[i] + beta + tot + 1, n[i]),
                         "(alpha_i+beta+|n|+1)_{n_i}");
        c *= pochhammer(Rational(-n[i]), l[i]) / factorial(l[i]);
        c *= checked_div(pochhammer(top, tail), pochhammer(alpha[i] + 1, tail), "(alpha_i+1)_{tail}");
        if (i + 1 < p) {
            const long rest = tail - l[i];
            c *= checked_div(pochhammer(alpha[i] + n[i] + 1, rest), pochhammer(top, rest),
                             "(alpha_i+beta+n_1+...+n_i+1)_{rest}");
        }
        if (c == 0) return c;
    }
    return c;
}

IdentityReport verify_identity(IdentityKind which, const IdentityParams& P) {
    switch (which) {
    case IdentityKind::ChuVandermonde: {
        if (P.n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
        Rational lhs = pochhammer(P.x + P.y, P.n);
        Rational rhs(0);
        for (long k = 0; k <= P.n; ++k) rhs += binomial(P.n, k) * pochhammer(P.x, k) * pochhammer(P.y, P.n - k);
        return {lhs, rhs, lhs == rhs};
    }
    case IdentityKind::Gauss: {
        if (P.n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
        Rational den = pochhammer(P.y, P.n);
        Rational rhs = checked_div(pochhammer(P.y - P.x, P.n), den, "(y)_n");
        Rational lhs = pfq_or_pole({Rational(-P.n), P.x}, {P.y}, 1);
        return {lhs, rhs, lhs == rhs};
    }
    case IdentityKind::PfaffSaalschutz: {
        if (P.n < 0 || P.k < 0) throw Error(ErrorKind::InvalidArgument, "n and k must be non-negative");
        const Rational &a = P.a, &b = P.b, &c = P.c;
        const long n = P.n, k = P.k;
        Rational lhs = pfq_or_pole({a, b, Rational(-n)}, {c + k, a + b + 1 - n - c}, 1);
        Rational pref = checked_div(pochhammer(c - a, n) * pochhammer(c - b + k, n),
                                    pochhammer(c + k, n) * pochhammer(c - a - b, n), "(c+k)_n (c-a-b)_n");
        Rational rhs = pref * pfq_or_pole({Rational(-k), b, Rational(-n)}, {c - a, b - c - k - n + 1}, 1);
        return {lhs, rhs, lhs == rhs};
    }
    case IdentityKind::Lemma1: return hahn_lemma(P, false);
    case IdentityKind::Lemma2: return hahn_lemma(P, true);
    case IdentityKind::Lemma3: return lemma3(P);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown identity");
}

}  // namespace mop
