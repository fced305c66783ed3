#pragma once

#include "mop/families.hpp"
#include "mop/identities.hpp"
#include "mop/serialize.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mop {

// Reproducible stream; every trial reseeds from (seed, tags...) so results do not depend on visiting order.
class Rng {
public:
    explicit Rng(std::initializer_list<std::uint64_t> tags);
    long uniform(long lo, long hi);  // inclusive
    template <class T> const T& pick(const std::vector<T>& v) { return v[uniform(0, static_cast<long>(v.size()) - 1)]; }

private:
    std::mt19937_64 gen_;
};

enum class SweepPreset { Small, Standard, Deep };
SweepPreset parse_sweep(const std::string& s);

struct SweepConfig {
    std::vector<std::size_t> p_values{1, 2, 3};
    long max_total = 5;
    int draws = 25;
    long biorth_max_total = 4;
    int biorth_draws = 3;
    int identity_trials = 200;
    std::uint64_t seed = 0;
    bool all_reports = false;
};
SweepConfig sweep_config(SweepPreset preset, std::uint64_t seed);

// Non-integer rational with a denominator in {7, 11, 13, 17}.
Rational random_fraction(Rng& rng, long lo, long hi);
// AT-valid parameters; for finite support N >= n_max + p so every shifted index stays in range.
FamilyParams random_params(Family f, std::size_t p, Rng& rng, long n_max);
IdentityParams random_identity_params(IdentityKind k, Rng& rng);

struct SuiteResult {
    std::string name;
    long passed = 0, failed = 0, skipped = 0, adjudicated = 0;
    std::vector<VerificationReport> reports;

    bool ok() const { return failed == 0; }
    void record(VerificationReport r, bool keep_all);
    void merge(SuiteResult&& o);
    ojson summary_json() const;
};

SuiteResult verify_type2_sweep(Family f, const SweepConfig& cfg);
// Also emits the prefactor adjudication records for Kravchuk and Meixner I.
SuiteResult verify_type1_sweep(Family f, const SweepConfig& cfg);
// Closed-form vs oracle recurrence coefficients plus the type II identity; the printed type I identity
// outcome is recorded as a separate summary report.
SuiteResult verify_recurrence_sweep(Family f, const SweepConfig& cfg);
SuiteResult verify_biorthogonality_sweep(Family f, const SweepConfig& cfg);
SuiteResult verify_identity_sweep(IdentityKind k, int trials, std::uint64_t seed, bool all_reports = false);
// Weighted-vs-coefficient type II (Hahn, Meixner II) and the Meixner I alternative type I form.
SuiteResult verify_representation_sweep(Family f, const SweepConfig& cfg);

const std::vector<Family>& all_families();

}  // namespace mop
