#include "mop/multi_index.hpp"

#include "mop/error.hpp"

#include <algorithm>
#include <numeric>

namespace mop {

MultiIndex::MultiIndex(std::vector<long> entries) : n_(std::move(entries)) {
    if (n_.empty()) throw Error(ErrorKind::InvalidArgument, "multi-index must have at least one entry");
    for (long v : n_)
        if (v < 0) throw Error(ErrorKind::InvalidArgument, "multi-index entries must be non-negative");
}

MultiIndex MultiIndex::unit(std::size_t p, std::size_t k) {
    std::vector<long> e(p, 0);
    e.at(k) = 1;
    return MultiIndex(std::move(e));
}

long MultiIndex::total() const { return std::accumulate(n_.begin(), n_.end(), 0L); }

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    std::vector<long> r(n_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.n_.at(i);
    return MultiIndex(std::move(r));
}

bool MultiIndex::can_subtract(const MultiIndex& o) const {
    for (std::size_t i = 0; i < n_.size(); ++i)
        if (n_[i] < o.n_.at(i)) return false;
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& o) const {
    if (!can_subtract(o)) throw Error(ErrorKind::InvalidShift, str() + " - " + o.str() + " has a negative entry");
    std::vector<long> r(n_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.n_[i];
    return MultiIndex(std::move(r));
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_.size(); ++i) s += (i ? "," : "") + std::to_string(n_[i]);
    return s + ")";
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t p, long max_total) {
    std::vector<MultiIndex> out;
    for (long t = 0; t <= max_total; ++t) {
        std::vector<long> cur(p, 0);
        // enumerate compositions of t into p parts, lexicographically descending in the first entry
        std::vector<std::vector<long>> found;
        auto rec = [&](auto&& self, std::size_t i, long left) -> void {
            if (i + 1 == p) {
                cur[i] = left;
                found.push_back(cur);
                return;
            }
            for (long v = 0; v <= left; ++v) {
                cur[i] = v;
                self(self, i + 1, left - v);
            }
        };
        rec(rec, 0, t);
        for (auto& f : found) out.emplace_back(std::move(f));
    }
    return out;
}

Permutation::Permutation(std::vector<int> one_based) : map_(std::move(one_based)), inv_(map_.size(), 0) {
    const int p = static_cast<int>(map_.size());
    if (p == 0) throw Error(ErrorKind::InvalidArgument, "empty permutation");
    for (int i = 0; i < p; ++i) {
        int v = map_[i];
        if (v < 1 || v > p || inv_[v - 1] != 0)
            throw Error(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(p));
        inv_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(std::size_t p) {
    std::vector<int> m(p);
    std::iota(m.begin(), m.end(), 1);
    return Permutation(std::move(m));
}

std::string Permutation::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < map_.size(); ++i) s += (i ? "," : "") + std::to_string(map_[i]);
    return s + ")";
}

std::vector<Permutation> all_permutations(std::size_t p) {
    std::vector<int> m(p);
    std::iota(m.begin(), m.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(m);
    while (std::next_permutation(m.begin(), m.end()));
    return out;
}

StepSets step_sets(const Permutation& perm, int j) {
    const int p = static_cast<int>(perm.size());
    if (j < 0 || j > p) throw Error(ErrorKind::InvalidArgument, "step index out of range");
    std::vector<long> s(p, 0);
    for (int i = 1; i <= j; ++i) s[perm(i) - 1] += 1;
    StepSets out{MultiIndex(std::move(s)), {}, {}};
    for (int i = 1; i <= p; ++i) (j <= perm.inverse(i) ? out.S : out.S_complement).push_back(i);
    return out;
}

}  // namespace mop
