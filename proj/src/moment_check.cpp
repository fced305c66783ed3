#include "mop/moment_check.hpp"

#include "mop/error.hpp"
#include "mop/oracle.hpp"

namespace mop {
namespace {

// w(x+1)/w(x) for component i
Rational weight_ratio(const FamilyParams& fp, std::size_t i, long x) {
    return std::visit(
        [&](const auto& P) -> Rational {
            using T = std::decay_t<decltype(P)>;
            const Rational X(x);
            if constexpr (std::is_same_v<T, HahnParams>)
                return (P.alpha[i] + 1 + X) * (P.N - X) / ((X + 1) * (P.beta + P.N - X));
            else if constexpr (std::is_same_v<T, MeixnerIIParams>)
                return (P.beta[i] + X) * P.c / (X + 1);
            else if constexpr (std::is_same_v<T, MeixnerIParams>)
                return (P.beta + X) * P.c[i] / (X + 1);
            else if constexpr (std::is_same_v<T, KravchukParams>)
                return (P.N - X) * P.pi[i] / ((X + 1) * (1 - P.pi[i]));
            else
                return P.a[i] / (X + 1);
        },
        fp.value());
}

// Limit of w(x+1)/w(x) as x grows; for the infinite supports the ratio is monotone towards it.
Rational ratio_limit(const FamilyParams& fp, std::size_t i) {
    switch (fp.family()) {
    case Family::MeixnerII: return fp.as<MeixnerIIParams>().c;
    case Family::MeixnerI: return fp.as<MeixnerIParams>().c[i];
    default: return 0;
    }
}

constexpr long max_terms = 10'000'000;

}  // namespace

std::vector<MomentComparison> validate_moments(const FamilyParams& fp, long jmax) {
    if (jmax < 0) throw Error(ErrorKind::InvalidArgument, "jmax must be non-negative");
    const Real tail("1e-45");
    std::vector<MomentComparison> out;
    for (std::size_t i = 0; i < fp.p(); ++i) {
        std::vector<Real> sum(jmax + 1, Real(0));
        Real w = 1;
        long x = 0;
        for (;; ++x) {
            if (x >= max_terms) throw Error(ErrorKind::InvalidArgument, "moment sum did not settle");
            Real xp = 1, last = 0;
            for (long j = 0; j <= jmax; ++j) {
                last = w * xp;
                sum[j] += last;
                xp *= x;
            }
            if (fp.finite_support() && x == fp.support_size_N()) break;
            const Real q = to_real(weight_ratio(fp, i, x));
            // For x >= 1 every x^j w(x) is bounded by x^jmax w(x), whose successive ratios stay below
            // rq from here on; the remaining tail is then at most last * rq / (1 - rq).
            if (!fp.finite_support() && x > 0) {
                const Real lim = to_real(ratio_limit(fp, i));
                const Real rq = (q > lim ? q : lim) * pow(Real(x + 1) / Real(x), jmax);
                if (rq < 1) {
                    Real smallest = sum[0];
                    for (auto& v : sum)
                        if (v < smallest) smallest = v;
                    if (last * rq / (1 - rq) <= tail * smallest) break;
                }
            }
            w *= q;
        }
        const auto table = normalized_moments(fp, i, jmax);
        for (long j = 0; j <= jmax; ++j) {
            MomentComparison c;
            c.component = i;
            c.j = j;
            c.closed = to_real(table.mu[j]);
            c.brute = sum[j] / sum[0];
            c.rel_error = abs(c.brute - c.closed) / abs(c.closed);
            c.terms = x + 1;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace mop
