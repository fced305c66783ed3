#include "mop/oracle.hpp"

#include "mop/error.hpp"
#include "mop/hypergeometric.hpp"

namespace mop {

namespace {

// S(m, j) for 0 <= j <= m <= mmax.
const std::vector<std::vector<Integer>>& stirling2(long mmax) {
    static thread_local std::vector<std::vector<Integer>> s{{Integer(1)}};
    while (static_cast<long>(s.size()) <= mmax) {
        const long m = static_cast<long>(s.size());
        std::vector<Integer> row(m + 1, Integer(0));
        for (long j = 1; j <= m; ++j) {
            Integer a = (j < m) ? s[m - 1][j] : Integer(0);
            row[j] = Integer(j) * a + s[m - 1][j - 1];
        }
        s.push_back(std::move(row));
    }
    return s;
}

Polynomial times_x(const Polynomial& p) { return p * Polynomial::x(); }

}  // namespace

std::vector<Rational> normalized_factorial_moments(const FamilyParams& fp, std::size_t i, long jmax) {
    std::vector<Rational> f(jmax + 1);
    switch (fp.family()) {
    case Family::Charlier: {
        const Rational& a = fp.as<CharlierParams>().a[i];
        for (long j = 0; j <= jmax; ++j) f[j] = pow(a, j);
        break;
    }
    case Family::MeixnerII: {
        const auto& P = fp.as<MeixnerIIParams>();
        const Rational r = P.c / (1 - P.c);
        for (long j = 0; j <= jmax; ++j) f[j] = pochhammer(P.beta[i], j) * pow(r, j);
        break;
    }
    case Family::MeixnerI: {
        const auto& P = fp.as<MeixnerIParams>();
        const Rational r = P.c[i] / (1 - P.c[i]);
        for (long j = 0; j <= jmax; ++j) f[j] = pochhammer(P.beta, j) * pow(r, j);
        break;
    }
    case Family::Kravchuk: {
        const auto& P = fp.as<KravchukParams>();
        for (long j = 0; j <= jmax; ++j) f[j] = j > P.N ? Rational(0) : factorial(P.N) / factorial(P.N - j) * pow(P.pi[i], j);
        break;
    }
    case Family::Hahn: {
        const long N = fp.support_size_N();
        std::vector<Rational> w(N + 1);
        Rational m0(0);
        for (long x = 0; x <= N; ++x) m0 += (w[x] = weight(fp, i, x));
        for (long j = 0; j <= jmax; ++j) {
            Rational s(0);
            for (long x = j; x <= N; ++x) s += w[x] * factorial(x) / factorial(x - j);
            f[j] = s / m0;
        }
        break;
    }
    }
    return f;
}

MomentTable normalized_moments(const FamilyParams& fp, std::size_t i, long jmax) {
    if (i >= fp.p()) throw Error(ErrorKind::InvalidArgument, "component index out of range");
    const auto f = normalized_factorial_moments(fp, i, jmax);
    const auto& S = stirling2(jmax);
    MomentTable t{i, std::vector<Rational>(jmax + 1)};
    for (long m = 0; m <= jmax; ++m)
        for (long j = 0; j <= m; ++j)
            if (S[m][j] != 0) t.mu[m] += Rational(S[m][j]) * f[j];
    return t;
}

LinearSystem::LinearSystem(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw Error(ErrorKind::InvalidArgument, "matrix and right-hand side differ in size");
    for (const auto& row : a_)
        if (row.size() != a_.size()) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
}

std::vector<Rational> LinearSystem::solve() const {
    auto a = a_;
    auto b = b_;
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        std::size_t best = 0;
        for (std::size_t r = col; r < n; ++r) {
            if (a[r][col] == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[r][col].get_num_mpz_t(), 2);
            if (piv == n || bits > best) {
                piv = r;
                best = bits;
            }
        }
        if (piv == n) throw Error(ErrorKind::SingularSystem, "singular moment system (AT property violated?)");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

const std::vector<Rational>& MomentCache::mu(std::size_t i, long jmax) {
    if (tables_.size() < fp_.p()) tables_.resize(fp_.p());
    if (static_cast<long>(tables_[i].size()) <= jmax) tables_[i] = normalized_moments(fp_, i, jmax).mu;
    return tables_[i];
}

Rational MomentCache::pair(std::size_t i, const Polynomial& P) {
    if (P.is_zero()) return 0;
    const auto& c = P.coeffs();
    const auto& m = mu(i, static_cast<long>(c.size()) - 1);
    Rational s(0);
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * m[k];
    return s;
}

Polynomial oracle_type2(MomentCache& mc, const MultiIndex& n) {
    const FamilyParams& fp = mc.params();
    if (n.size() != fp.p()) throw Error(ErrorKind::InvalidArgument, "multi-index length differs from p");
    if (fp.finite_support() && n.total() > fp.support_size_N())
        throw Error(ErrorKind::DegreeExceedsSupport, "|n| exceeds N");
    if (auto it = mc.type2_.find(n); it != mc.type2_.end()) return it->second;
    const long d = n.total();
    if (d == 0) return Polynomial::constant(1);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        const auto& m = mc.mu(i, d + n[i] - 1);
        for (long j = 0; j < n[i]; ++j) {
            std::vector<Rational> row(d);
            for (long k = 0; k < d; ++k) row[k] = m[j + k];
            A.push_back(std::move(row));
            b.push_back(-m[j + d]);
        }
    }
    auto c = LinearSystem(std::move(A), std::move(b)).solve();
    c.emplace_back(1);
    return mc.type2_[n] = Polynomial(std::move(c));
}

Polynomial oracle_type2(const FamilyParams& fp, const MultiIndex& n) {
    MomentCache mc(fp);
    return oracle_type2(mc, n);
}

std::vector<Polynomial> oracle_type1(MomentCache& mc, const MultiIndex& n) {
    const FamilyParams& fp = mc.params();
    if (n.size() != fp.p()) throw Error(ErrorKind::InvalidArgument, "multi-index length differs from p");
    if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "type I polynomials need |n| >= 1");
    if (fp.finite_support() && n.total() > fp.support_size_N() + 1)
        throw Error(ErrorKind::DegreeExceedsSupport, "|n| exceeds N+1");
    if (auto it = mc.type1_.find(n); it != mc.type1_.end()) return it->second;
    const long d = n.total();
    std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
    std::vector<Rational> b(d);
    b[d - 1] = 1;
    long col = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        const auto& m = mc.mu(i, d + n[i] - 2);
        for (long k = 0; k < n[i]; ++k, ++col)
            for (long j = 0; j < d; ++j) A[j][col] = m[j + k];
    }
    const auto sol = LinearSystem(std::move(A), std::move(b)).solve();
    std::vector<Polynomial> out;
    col = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        std::vector<Rational> c(sol.begin() + col, sol.begin() + col + n[i]);
        col += n[i];
        out.emplace_back(std::move(c));
    }
    return mc.type1_[n] = out;
}

std::vector<Polynomial> oracle_type1(const FamilyParams& fp, const MultiIndex& n) {
    MomentCache mc(fp);
    return oracle_type1(mc, n);
}

namespace {

Rational pair_linear_form(MomentCache& mc, const Polynomial& P, const std::vector<Polynomial>& A) {
    Rational s(0);
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!A[i].is_zero()) s += mc.pair(i, P * A[i]);
    return s;
}

}  // namespace

OracleRecurrence oracle_nnrc_entries(MomentCache& mc, const MultiIndex& n, const Permutation& perm) {
    const FamilyParams& fp = mc.params();
    const std::size_t p = fp.p();
    if (n.size() != p || perm.size() != p) throw Error(ErrorKind::InvalidArgument, "length differs from p");
    const Polynomial xB = times_x(oracle_type2(mc, n));
    OracleRecurrence r;
    for (std::size_t k = 0; k < p; ++k)
        r.b0.push_back(pair_linear_form(mc, xB, oracle_type1(mc, n.plus(MultiIndex::unit(p, k)))));
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const MultiIndex s = step_sets(perm, j - 1).s;
        if (!n.can_subtract(s) || n.minus(s).is_zero()) {
            r.bj.emplace_back();
            continue;
        }
        r.bj.emplace_back(pair_linear_form(mc, xB, oracle_type1(mc, n.minus(s))));
    }
    return r;
}

RecurrenceCoefficients oracle_nnrc(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm) {
    MomentCache mc(fp);
    auto e = oracle_nnrc_entries(mc, n, perm);
    RecurrenceCoefficients r{e.b0, {}, perm};
    for (std::size_t j = 0; j < e.bj.size(); ++j) {
        if (!e.bj[j])
            throw Error(ErrorKind::InvalidShift,
                        "n - s_" + std::to_string(j) + " is not a valid non-zero multi-index for n = " + n.str());
        r.bj.push_back(*e.bj[j]);
    }
    return r;
}

BiorthogonalityResult check_biorthogonality(MomentCache& mc, const MultiIndex& n, const MultiIndex& m) {
    BiorthogonalityResult res;
    bool dominated = true;
    for (std::size_t i = 0; i < n.size(); ++i) dominated = dominated && m[i] <= n[i];
    if (dominated) res.expected = BiorthogonalityResult::Case::Zero;
    else if (m.total() == n.total() + 1) res.expected = BiorthogonalityResult::Case::One;
    else if (m.total() > n.total() + 1) res.expected = BiorthogonalityResult::Case::Zero;
    res.value = pair_linear_form(mc, type2(mc.params(), n), closed_type1_normalized(mc.params(), m));
    if (res.expected == BiorthogonalityResult::Case::Zero) res.pass = res.value == 0;
    else if (res.expected == BiorthogonalityResult::Case::One) res.pass = res.value == 1;
    return res;
}

BiorthogonalityResult check_biorthogonality(const FamilyParams& fp, const MultiIndex& n, const MultiIndex& m) {
    MomentCache mc(fp);
    return check_biorthogonality(mc, n, m);
}

RecurrenceResidual recurrence_residual_type2(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm,
                                             std::size_t k) {
    const std::size_t p = fp.p();
    const auto rc = nnrc(fp, n, perm);
    const Polynomial Bn = type2(fp, n);
    Polynomial res = times_x(Bn) - type2(fp, n.plus(MultiIndex::unit(p, k))) - rc.b0[k] * Bn;
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const MultiIndex s = step_sets(perm, j).s;
        const Rational& b = rc.bj[j - 1];
        if (!n.can_subtract(s)) {
            if (b != 0)
                throw Error(ErrorKind::InvalidShift, "b^" + std::to_string(j) + " = " + to_string(b) +
                                                         " multiplies the invalid index n - s_" + std::to_string(j));
            continue;
        }
        res -= b * type2(fp, n.minus(s));
    }
    return {res.is_zero(), {res}};
}

RecurrenceResidual recurrence_residual_type1(MomentCache& mc, const MultiIndex& n, const Permutation& perm,
                                             std::size_t k, TypeIShift shift) {
    const FamilyParams& fp = mc.params();
    const std::size_t p = fp.p();
    const MultiIndex ek = MultiIndex::unit(p, k);
    if (!n.can_subtract(ek)) throw Error(ErrorKind::InvalidShift, "n - e_k is not a valid multi-index");
    const MultiIndex nk = n.minus(ek);
    auto res = oracle_type1(mc, n);
    const Rational b0 = nnrc(fp, nk, perm).b0[k];
    std::vector<Polynomial> Ank = nk.is_zero() ? std::vector<Polynomial>(p) : oracle_type1(mc, nk);
    for (std::size_t i = 0; i < p; ++i) res[i] = times_x(res[i]) - Ank[i] - b0 * res[i];
    for (int j = 1; j <= static_cast<int>(p); ++j) {
        const MultiIndex sub = n.plus(step_sets(perm, shift == TypeIShift::Printed ? j - 1 : j).s);
        const Rational b = nnrc(fp, sub, perm).bj[j - 1];
        const auto A = oracle_type1(mc, n.plus(step_sets(perm, j).s));
        for (std::size_t i = 0; i < p; ++i) res[i] -= b * A[i];
    }
    RecurrenceResidual out{true, res};
    for (const auto& r : res) out.zero = out.zero && r.is_zero();
    return out;
}

bool check_recurrence_identity(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm, std::size_t k,
                               RecurrenceKind which) {
    if (which == RecurrenceKind::TypeII) return recurrence_residual_type2(fp, n, perm, k).zero;
    MomentCache mc(fp);
    return recurrence_residual_type1(mc, n, perm, k).zero;
}

std::vector<Polynomial> closed_type1_normalized(const FamilyParams& fp, const MultiIndex& n, Type1Form form) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < fp.p(); ++i) {
        if (n[i] == 0) {
            out.emplace_back();
            continue;
        }
        out.push_back(mass_normalized(fp, i, type1(fp, n, i, form)));
    }
    return out;
}

}  // namespace mop
