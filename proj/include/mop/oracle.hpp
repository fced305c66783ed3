#pragma once

#include "mop/families.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mop {

// mu_j = sum_x x^j w_i(x) / m0^{(i)}, j = 0..jmax.
struct MomentTable {
    std::size_t component = 0;
    std::vector<Rational> mu;
};

// Normalized falling-factorial moments E[x(x-1)...(x-j+1)] from their closed forms.
std::vector<Rational> normalized_factorial_moments(const FamilyParams& fp, std::size_t i, long jmax);
MomentTable normalized_moments(const FamilyParams& fp, std::size_t i, long jmax);

class LinearSystem {
public:
    LinearSystem(std::vector<std::vector<Rational>> a, std::vector<Rational> b);
    // Exact Gaussian elimination, partial pivoting on the largest numerator bit length.
    std::vector<Rational> solve() const;

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
};

// Moments for all components, shared by the oracle routines.
class MomentCache {
public:
    explicit MomentCache(const FamilyParams& fp) : fp_(fp) {}
    const FamilyParams& params() const { return fp_; }
    const std::vector<Rational>& mu(std::size_t i, long jmax);
    // sum_x P(x) w_i(x) / m0^{(i)}
    Rational pair(std::size_t i, const Polynomial& P);

private:
    friend Polynomial oracle_type2(MomentCache&, const MultiIndex&);
    friend std::vector<Polynomial> oracle_type1(MomentCache&, const MultiIndex&);
    FamilyParams fp_;
    std::vector<std::vector<Rational>> tables_;
    std::map<MultiIndex, Polynomial> type2_;
    std::map<MultiIndex, std::vector<Polynomial>> type1_;
};

Polynomial oracle_type2(const FamilyParams& fp, const MultiIndex& n);
// Memoized in the cache.
Polynomial oracle_type2(MomentCache& mc, const MultiIndex& n);

// Mass-normalized components m0^{(i)} A^{(i)}_n, one per weight.
std::vector<Polynomial> oracle_type1(const FamilyParams& fp, const MultiIndex& n);
std::vector<Polynomial> oracle_type1(MomentCache& mc, const MultiIndex& n);

// b^j is recoverable only when n - s_{j-1} is a valid non-zero index; other entries stay empty.
struct OracleRecurrence {
    std::vector<Rational> b0;
    std::vector<std::optional<Rational>> bj;
};
OracleRecurrence oracle_nnrc_entries(MomentCache& mc, const MultiIndex& n, const Permutation& perm);
// Strict form: throws InvalidShift when some n - s_{j-1} is not a valid non-zero index.
RecurrenceCoefficients oracle_nnrc(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm);

struct BiorthogonalityResult {
    enum class Case { Zero, One, Undetermined };
    Case expected = Case::Undetermined;
    Rational value;
    bool pass = true;
};
BiorthogonalityResult check_biorthogonality(const FamilyParams& fp, const MultiIndex& n, const MultiIndex& m);
BiorthogonalityResult check_biorthogonality(MomentCache& mc, const MultiIndex& n, const MultiIndex& m);

enum class RecurrenceKind { TypeII, TypeI };

// Type I subscript choice for the b^j coefficients: n + s_{j-1} as printed, or n + s_j.
enum class TypeIShift { Printed, Shifted };

struct RecurrenceResidual {
    bool zero = true;
    std::vector<Polynomial> residuals;  // one for type II, p for type I
};

// Type II: x B_n - B_{n+e_k} - b0(k) B_n - sum_j b^j B_{n-s_j}. Terms with an invalid n - s_j must
// carry b^j = 0, otherwise InvalidShift. k is 0-based.
RecurrenceResidual recurrence_residual_type2(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm,
                                             std::size_t k);
// Type I with mass-normalized oracle components:
//   x A_n - A_{n-e_k} - b0_{n-e_k}(k) A_n - sum_j b^j_{n+s_{j-1}} A_{n+s_j}
RecurrenceResidual recurrence_residual_type1(MomentCache& mc, const MultiIndex& n, const Permutation& perm,
                                             std::size_t k, TypeIShift shift = TypeIShift::Printed);

bool check_recurrence_identity(const FamilyParams& fp, const MultiIndex& n, const Permutation& perm, std::size_t k,
                               RecurrenceKind which);

// Mass-normalized closed-form type I components (zero for n_i = 0).
std::vector<Polynomial> closed_type1_normalized(const FamilyParams& fp, const MultiIndex& n,
                                                Type1Form form = Type1Form::Printed);

}  // namespace mop
