#pragma once

// Small seeded generators for property tests. Each test builds its own Gen from a fixed seed so a
// failure reproduces from the printed trial number.

#include "mop/families.hpp"
#include "mop/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gen {

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    std::mt19937_64 rng;

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    // Non-integer rational in (lo, hi) with a small prime denominator.
    mop::Rational fraction(long lo, long hi) {
        static const long dens[] = {3, 5, 7, 11, 13};
        const long d = dens[integer(0, 4)];
        for (;;) {
            const long num = integer(lo * d + 1, hi * d - 1);
            if (num % d != 0) return mop::Rational(num, d);
        }
    }

    mop::MultiIndex multi_index(std::size_t p, long max_total) {
        std::vector<long> v(p, 0);
        const long total = integer(0, max_total);
        for (long k = 0; k < total; ++k) ++v[integer(0, static_cast<long>(p) - 1)];
        return mop::MultiIndex(v);
    }

    mop::Permutation permutation(std::size_t p) {
        std::vector<int> v(p);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        return mop::Permutation(v);
    }

    // Distinct fractions, so AT conditions on differences hold.
    std::vector<mop::Rational> distinct(std::size_t p, long lo, long hi, bool non_integer_differences) {
        for (;;) {
            std::vector<mop::Rational> v;
            for (std::size_t i = 0; i < p; ++i) v.push_back(fraction(lo, hi));
            bool ok = true;
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = i + 1; j < p; ++j) {
                    const mop::Rational d = v[i] - v[j];
                    ok = ok && d != 0 && (!non_integer_differences || d.get_den() != 1);
                }
            if (ok) return v;
        }
    }

    mop::FamilyParams params(mop::Family f, std::size_t p, long n_max) {
        using namespace mop;
        for (;;) {
            try {
                switch (f) {
                case Family::Hahn: {
                    auto al = distinct(p, -1, 3, true);
                    auto be = fraction(-1, 3);
                    bool bad = false;
                    for (auto& a : al) bad = bad || mop::Rational(a + be).get_den() == 1;
                    if (bad) continue;
                    return FamilyParams::make(HahnParams{al, be, n_max + static_cast<long>(p) + integer(0, 2)});
                }
                case Family::MeixnerII: return FamilyParams::make(MeixnerIIParams{distinct(p, 0, 3, true), fraction(0, 1)});
                case Family::MeixnerI: return FamilyParams::make(MeixnerIParams{fraction(0, 3), distinct(p, 0, 1, false)});
                case Family::Kravchuk:
                    return FamilyParams::make(KravchukParams{distinct(p, 0, 1, false), n_max + static_cast<long>(p) + integer(0, 2)});
                case Family::Charlier: return FamilyParams::make(CharlierParams{distinct(p, 0, 4, false)});
                }
            } catch (const std::exception&) {
            }
        }
    }
};

inline const std::vector<mop::Family>& families() {
    static const std::vector<mop::Family> f{mop::Family::Hahn, mop::Family::MeixnerII, mop::Family::MeixnerI,
                                            mop::Family::Kravchuk, mop::Family::Charlier};
    return f;
}

}  // namespace gen
