#pragma once

#include "linsys/base_locus.hpp"
#include "linsys/binom.hpp"

namespace linsys {

// One standard Cremona move: the n+1 base labels and the degree shift
// c = (n-1)d - sum of the base multiplicities.  The move sends the degree
// to d + c and adds c to each base multiplicity.
struct CremonaMove {
    std::vector<int> base;  // 1-based labels, ascending
    long long c = 0;
};

inline long long cremona_c(const LinearSystemSpec& spec, const std::vector<int>& base) {
    long long sum = 0;
    for (int l : base) sum += spec.mult(l);
    return static_cast<long long>(spec.n() - 1) * spec.d() - sum;
}

// Action of the standard Cremona transformation based at the given n+1
// points.  The result may carry negative entries; it is a formal class and
// the caller decides what to make of it.  Applying the same move twice is
// the identity, and b transforms as b -> b + c.
inline LinearSystemSpec cremona_apply(const LinearSystemSpec& spec, const std::vector<int>& base) {
    if (static_cast<int>(base.size()) != spec.n() + 1)
        throw std::invalid_argument("cremona_apply: base must have n+1 points");
    MultiIndex check = MultiIndex::from_labels(base, spec.s());  // validates range/duplicates
    long long c = cremona_c(spec, base);
    std::vector<long long> m = spec.mults();
    for (int l : base) m[static_cast<size_t>(l - 1)] += c;
    (void)check;
    return LinearSystemSpec::unchecked(spec.n(), spec.d() + c, std::move(m));
}

// Repeated Cremona reduction: while the move on the n+1 largest
// multiplicities (ties to the lowest label) has c < 0 it is applied; the
// loop stops once c >= 0, or before a step that would drive the degree or a
// multiplicity negative.  Returns the reduced spec and the move log.
inline std::pair<LinearSystemSpec, std::vector<CremonaMove>> cremona_reduce(
    const LinearSystemSpec& spec, int max_steps = 4096) {
    if (spec.s() < spec.n() + 1)
        throw std::invalid_argument("cremona_reduce: needs at least n+1 points");
    LinearSystemSpec cur = spec;
    std::vector<CremonaMove> log;
    for (int step = 0;; ++step) {
        if (step >= max_steps) throw cap_exceeded("cremona_reduce: step cap exceeded");
        std::vector<int> base;
        for (int i = 0; i < cur.n() + 1; ++i) base.push_back(cur.sorted_label(i));
        std::sort(base.begin(), base.end());
        long long c = cremona_c(cur, base);
        if (c >= 0) break;
        LinearSystemSpec next = cremona_apply(cur, base);
        if (next.d() < 0) break;
        bool neg = false;
        for (long long v : next.mults())
            if (v < 0) neg = true;
        if (neg) break;
        log.push_back({base, c});
        cur = next;
    }
    return {cur, log};
}

// The strict transform of the Cremona image of a hyperplane on the space
// blown up along the coordinate simplex:  nH - sum (n - rho - 1) E_I over
// all subsets I of the n+1 base points with |I| = rho+1 <= n-1.
inline PicardClass cr_divisor(int n) {
    if (n < 2) throw std::invalid_argument("cr_divisor: n must be >= 2");
    PicardClass cls = PicardClass::hyperplane_multiple(n);
    for (uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
        int size = std::popcount(mask);
        if (size > n - 1) continue;
        cls.add(MultiIndex(mask), -(n - size));  // n - rho - 1 with rho = size-1
    }
    return cls;
}

// Cohomology of any integer multiple of the Cremona hyperplane: identical
// to that of the same multiple of O(1) on P^n.  h^0 = C(n+a, n), h^n =
// C(-a-1, n) (each vanishing outside its range by the binomial convention),
// everything in between is zero.
inline std::vector<Bint> cr_cohomology(int n, long long a) {
    std::vector<Bint> h(static_cast<size_t>(n) + 1, Bint(0));
    h[0] = binom(n + a, n);
    h[static_cast<size_t>(n)] = binom(-a - 1, n);
    return h;
}

}  // namespace linsys
