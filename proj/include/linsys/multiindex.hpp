#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "linsys/spec.hpp"

namespace linsys {

// A set of point labels drawn from {1..s}, s <= 30, stored as a bitmask.
// Bit i set means label i+1 is in the set.  The empty index stands for the
// degree term of the dimension sums.  |I| = r+1 for a linear cycle of
// dimension r.
struct MultiIndex {
    uint32_t mask = 0;

    MultiIndex() = default;
    explicit MultiIndex(uint32_t m) : mask(m) {}

    static MultiIndex empty() { return MultiIndex(); }

    static MultiIndex from_labels(const std::vector<int>& labels, int s) {
        MultiIndex out;
        for (int l : labels) {
            if (l < 1 || l > s) throw std::invalid_argument("point label out of range");
            uint32_t bit = 1u << (l - 1);
            if (out.mask & bit) throw std::invalid_argument("repeated point label");
            out.mask |= bit;
        }
        return out;
    }

    int size() const { return std::popcount(mask); }
    // Cycle dimension: |I| - 1, with the empty index at -1.
    int dim() const { return size() - 1; }
    bool is_empty() const { return mask == 0; }
    bool contains(int label1) const { return (mask >> (label1 - 1)) & 1u; }
    bool subset_of(const MultiIndex& o) const { return (mask & ~o.mask) == 0; }
    bool disjoint_from(const MultiIndex& o) const { return (mask & o.mask) == 0; }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        for (uint32_t m = mask; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    bool operator==(const MultiIndex& o) const { return mask == o.mask; }
    // Deterministic ordering: by cardinality, then by mask.
    bool operator<(const MultiIndex& o) const {
        int a = size(), b = o.size();
        return a != b ? a < b : mask < o.mask;
    }
};

// K_I = sum_{i in I} m_i - (|I|-1) d and k_I = max(K_I, 0); for I = {} the
// pair is (d, max(d,0)).  k_I is the exact multiplicity with which the span
// of the points of I sits in the base locus.
struct KValue {
    long long K = 0;
    long long k = 0;
};

inline KValue k_value(const LinearSystemSpec& spec, const MultiIndex& I) {
    KValue out;
    if (I.is_empty()) {
        out.K = spec.d();
    } else {
        long long sum = 0;
        for (uint32_t m = I.mask; m; m &= m - 1)
            sum += spec.mults()[static_cast<size_t>(std::countr_zero(m))];
        out.K = sum - static_cast<long long>(I.size() - 1) * spec.d();
    }
    out.k = out.K > 0 ? out.K : 0;
    return out;
}

struct SubsetK {
    MultiIndex I;
    long long K = 0;
    long long k = 0;
    bool zero_mult = false;  // some member has multiplicity 0
};

namespace detail {

// Enumerate the subsets of size `size` whose K value is >= `min_K`, in the
// non-increasing multiplicity order, with branch-and-bound pruning: a prefix
// is abandoned as soon as even the largest available completions cannot
// reach the threshold.
template <typename Visitor>
void enumerate_size(const LinearSystemSpec& spec, int size, long long min_K, Visitor&& visit) {
    const int s = spec.s();
    if (size < 1 || size > s) return;
    const auto& m = spec.sorted_mults();
    std::vector<long long> suffix_top(static_cast<size_t>(s) + 1, 0);  // sum of first j sorted mults
    for (int j = 0; j < s; ++j) suffix_top[static_cast<size_t>(j) + 1] = suffix_top[static_cast<size_t>(j)] + m[static_cast<size_t>(j)];
    const long long base = static_cast<long long>(size - 1) * spec.d() + min_K;  // needed sum
    // Quick reject for the whole size: even the `size` largest fall short.
    if (suffix_top[static_cast<size_t>(size)] < base) return;

    std::vector<int> pick(static_cast<size_t>(size));
    std::function<void(int, int, long long)> rec = [&](int depth, int from, long long sum) {
        if (depth == size) {
            uint32_t mask = 0;
            bool zero = false;
            for (int idx : pick) {
                mask |= 1u << (spec.sorted_label(idx) - 1);
                if (m[static_cast<size_t>(idx)] == 0) zero = true;
            }
            SubsetK rec_out;
            rec_out.I = MultiIndex(mask);
            rec_out.K = sum - static_cast<long long>(size - 1) * spec.d();
            rec_out.k = rec_out.K > 0 ? rec_out.K : 0;
            rec_out.zero_mult = zero;
            visit(rec_out);
            return;
        }
        const int need = size - depth;
        for (int i = from; i + need <= s; ++i) {
            // best completion: this element plus the next need-1 ones
            long long best = sum + (suffix_top[static_cast<size_t>(i + need)] - suffix_top[static_cast<size_t>(i)]);
            if (best < base) break;  // sorted: later starts are no better
            pick[static_cast<size_t>(depth)] = i;
            rec(depth + 1, i + 1, sum + m[static_cast<size_t>(i)]);
        }
    };
    rec(0, 0, 0);
}

}  // namespace detail

// All subsets I with K_I >= min_K(|I|) and 1 <= |I| <= max_size, visitor
// form.  min_K is a callable size -> threshold.
template <typename MinK, typename Visitor>
void enumerate_subsets(const LinearSystemSpec& spec, int max_size, MinK&& min_K, Visitor&& visit) {
    if (spec.s() > kMaxPoints) throw cap_exceeded("subset enumeration: too many points");
    for (int size = 1; size <= max_size && size <= spec.s(); ++size)
        detail::enumerate_size(spec, size, min_K(size), visit);
}

// The subsets with K_I >= 0 up to the requested size, materialized.
// Singletons of multiplicity-0 points qualify with K = 0 and are flagged;
// base-locus tables drop them since their k vanishes.
inline std::vector<SubsetK> subsets_with_nonneg_K(const LinearSystemSpec& spec, int max_size,
                                                  size_t yield_cap = 1u << 22) {
    std::vector<SubsetK> out;
    enumerate_subsets(
        spec, max_size, [](int) { return 0LL; },
        [&](const SubsetK& sk) {
            if (out.size() >= yield_cap) throw cap_exceeded("subset yield cap exceeded");
            out.push_back(sk);
        });
    return out;
}

}  // namespace linsys
