#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mop {

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<long> entries);
    static MultiIndex zeros(std::size_t p) { return MultiIndex(std::vector<long>(p, 0)); }
    static MultiIndex unit(std::size_t p, std::size_t k);  // k is 0-based

    std::size_t size() const { return n_.size(); }
    long operator[](std::size_t i) const { return n_[i]; }
    long total() const;
    const std::vector<long>& entries() const { return n_; }
    bool is_zero() const { return total() == 0; }

    MultiIndex plus(const MultiIndex& o) const;
    // Throws InvalidShift if any entry would go negative.
    MultiIndex minus(const MultiIndex& o) const;
    bool can_subtract(const MultiIndex& o) const;

    bool operator==(const MultiIndex& o) const { return n_ == o.n_; }
    bool operator<(const MultiIndex& o) const { return n_ < o.n_; }
    std::string str() const;

private:
    std::vector<long> n_;
};

// All multi-indices of length p with |n| <= max_total, ordered by total then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(std::size_t p, long max_total);

// Bijection on {1..p}; stored 1-based as printed, e.g. (4,2,1,3).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_based);
    static Permutation identity(std::size_t p);

    std::size_t size() const { return map_.size(); }
    int operator()(int i) const { return map_[i - 1]; }  // pi(i), 1-based
    int inverse(int i) const { return inv_[i - 1]; }
    const std::vector<int>& mapping() const { return map_; }
    std::string str() const;

private:
    std::vector<int> map_, inv_;
};

std::vector<Permutation> all_permutations(std::size_t p);

struct StepSets {
    MultiIndex s;            // s_j = sum_{i<=j} e_{pi(i)}
    std::vector<int> S;      // {i : j <= pi^{-1}(i)}, 1-based, ascending
    std::vector<int> S_complement;
};

StepSets step_sets(const Permutation& perm, int j);

}  // namespace mop
