#pragma once

#include <deque>
#include <optional>
#include <set>

#include "linsys/binom.hpp"
#include "linsys/multiindex.hpp"

namespace linsys {

// chi of the line bundle before any cycle corrections: C(n+d,n) minus the
// number of conditions imposed by the fat points.
inline Bint vdim(const LinearSystemSpec& spec) {
    Bint v = binom(spec.n() + spec.d(), spec.n());
    for (long long m : spec.mults()) v -= binom(spec.n() + m - 1, spec.n());
    return v;
}

inline Bint edim(const LinearSystemSpec& spec) {
    Bint v = vdim(spec);
    return v > 0 ? v : Bint(0);
}

// One signed summand of the linear dimension count: the cycle spanned by I
// (dimension r = |I|-1, containment multiplicity k) contributes
// (-1)^{r+1} C(n + k - r - 1, n).
struct DimensionTerm {
    MultiIndex I;
    int r = -1;
    long long k = 0;
    Bint term;
};

// Alternating tail of the dimension sum over the cycles of dimension >= r,
// each entering with sign (-1)^{dim - r}:
//
//   l_tail(spec, r) = sum_{rho >= r} (-1)^{rho - r} sum_{|I| = rho+1} C(n + k_I - rho - 1, n)
//
// anchored so that the leading slice enters positively.  l_tail(spec, -1)
// is the full linear virtual dimension (the empty index contributes
// C(n+d,n)), and in the guaranteed regimes h^{r+1} of the level-r strict
// transform equals l_tail(spec, r+1).  Only subsets with K_I >= |I| can
// contribute, which is what the enumeration threshold enforces.
inline Bint l_tail(const LinearSystemSpec& spec, int r,
                   std::vector<DimensionTerm>* terms = nullptr) {
    if (r < -1 || r > spec.n()) throw std::invalid_argument("l_tail: level out of range");
    Bint total = 0;
    if (r == -1) {
        Bint t = binom(spec.n() + spec.d(), spec.n());
        total += t;
        if (terms) terms->push_back({MultiIndex::empty(), -1, spec.d() > 0 ? spec.d() : 0, t});
    }
    if (spec.s() > kMaxPoints) throw cap_exceeded("subset enumeration: too many points");
    int start = r < 1 ? 1 : r + 1;  // smallest subset size in the tail
    for (int size = start; size <= spec.s(); ++size) {
        // Only subsets with K >= size contribute a non-zero binomial.
        detail::enumerate_size(spec, size, size, [&](const SubsetK& sk) {
            Bint t = binom(spec.n() + sk.k - size, spec.n());
            if (t == 0) return;
            int rho = size - 1;
            bool neg = ((rho - r) & 1) != 0;
            if (neg)
                total -= t;
            else
                total += t;
            if (terms) terms->push_back({sk.I, rho, sk.k, neg ? Bint(-t) : t});
        });
    }
    return total;
}

// The (affine) linear virtual dimension: the alternating binomial sum over
// all point subsets, empty index included.
inline Bint ldim(const LinearSystemSpec& spec, std::vector<DimensionTerm>* terms = nullptr) {
    return l_tail(spec, -1, terms);
}

struct LexpdimResult {
    std::optional<Bint> value;  // empty when the search budget ran out
    long long nodes_visited = 0;
};

// The linear expected dimension: 0 if the system sits inside a system of
// the same degree with negative linear virtual dimension (itself included),
// otherwise max(ldim, 0).  The containment search walks the lattice of
// component-wise smaller multiplicity vectors breadth-first by total
// decrement, up to `budget` nodes; an exhausted budget is reported as
// unknown rather than guessed.
inline LexpdimResult lexpdim(const LinearSystemSpec& spec, long long budget = 20000) {
    LexpdimResult res;
    Bint own = ldim(spec);
    res.nodes_visited = 1;
    if (own < 0) {
        res.value = 0;
        return res;
    }
    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> queue;
    std::vector<long long> start = spec.sorted_mults();
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        std::vector<long long> cur = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == 0) continue;
            std::vector<long long> next = cur;
            next[i] -= 1;
            std::sort(next.begin(), next.end(), std::greater<long long>());
            if (!seen.insert(next).second) continue;
            if (res.nodes_visited >= budget) return res;  // unknown
            ++res.nodes_visited;
            if (ldim(LinearSystemSpec::unchecked(spec.n(), spec.d(), next)) < 0) {
                res.value = 0;
                return res;
            }
            queue.push_back(next);
        }
    }
    res.value = own > 0 ? own : Bint(0);
    return res;
}

struct DimensionReport {
    Bint vdim;
    Bint edim;
    Bint ldim;
    std::optional<Bint> lexpdim;  // empty = search budget exhausted
    long long b = 0;
    std::vector<DimensionTerm> terms;
};

inline DimensionReport dimension_report(const LinearSystemSpec& spec, long long lexp_budget = 20000) {
    DimensionReport rep;
    rep.vdim = vdim(spec);
    rep.edim = rep.vdim > 0 ? rep.vdim : Bint(0);
    rep.ldim = ldim(spec, &rep.terms);
    rep.lexpdim = lexpdim(spec, lexp_budget).value;
    rep.b = spec.b();
    return rep;
}

}  // namespace linsys
