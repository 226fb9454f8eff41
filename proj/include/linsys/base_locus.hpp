#pragma once

#include <map>
#include <set>
#include <utility>

#include "linsys/picard.hpp"

namespace linsys {

// The exact linear base locus: every subset I with 1 <= |I| <= min(n, s)
// and K_I >= 1 spans a cycle contained with multiplicity exactly k_I = K_I.
// For non-effective classes the same table is kept as a formal base locus.
struct BaseLocusTable {
    long long b = 0;
    int rbar = -1;  // largest cycle dimension with some K >= 0
    std::map<MultiIndex, long long> entries;
};

inline BaseLocusTable base_locus(const LinearSystemSpec& spec) {
    BaseLocusTable table;
    table.b = spec.b();
    int max_size = spec.n() < spec.s() ? spec.n() : spec.s();
    for (int size = 1; size <= max_size; ++size) {
        detail::enumerate_size(spec, size, 0, [&](const SubsetK& sk) {
            table.rbar = table.rbar > size - 1 ? table.rbar : size - 1;
            if (sk.k >= 1) table.entries.emplace(sk.I, sk.k);
        });
    }
    return table;
}

// The class of the strict transform D_(r) on the space blown up along all
// base cycles of dimension <= r:  dH - sum_{dim <= r} k_I E_I.  At the top
// level r = n-1 the hyperplane-type entries (|I| = n) are rewritten through
//
//     E_I = H - sum_{J proper subset of I, K_J >= 0} E_J
//
// so the resulting class lives in the span of H and the E_J with |J| <= n-1.
inline PicardClass strict_transform(const LinearSystemSpec& spec, int r) {
    if (r < 0 || r > spec.n() - 1) throw std::invalid_argument("strict_transform: level out of range");
    BaseLocusTable table = base_locus(spec);
    PicardClass cls = PicardClass::hyperplane_multiple(spec.d());
    for (const auto& [I, k] : table.entries) {
        if (I.dim() > r) continue;
        if (I.size() < spec.n()) {
            cls.add(I, -k);
        } else {
            // hyperplane entry: expand through the Picard basis of the level
            // below (the top blow-up is an isomorphism)
            cls.degree -= k;
            for (uint32_t sub = (I.mask - 1) & I.mask; sub != 0; sub = (sub - 1) & I.mask) {
                MultiIndex J(sub);
                if (k_value(spec, J).K >= 0) cls.add(J, k);
            }
        }
    }
    return cls;
}

inline PicardClass tilde_transform(const LinearSystemSpec& spec) {
    return strict_transform(spec, spec.n() - 1);
}

// The three combinatorial conditions on the family I = {I : K_I >= 0} that
// the blow-up construction needs:
//   (I)   all singletons belong to the family;
//   (II)  the family is closed under taking subsets;
//   (III) no two disjoint members I, J with |I| + |J| = n + 2 both carry
//         K >= 1 (such spans would meet in a point away from every L_{I cap J}).
struct ConditionsReport {
    bool holds_I = true;
    bool holds_II = true;
    bool holds_III = true;
    std::vector<std::pair<MultiIndex, MultiIndex>> witnesses;  // (I, J) or (I, missing subset)
};

template <typename KFun>
ConditionsReport check_conditions_family(int n, int s, const std::vector<MultiIndex>& family,
                                         KFun&& K_of) {
    ConditionsReport rep;
    std::set<uint32_t> members;
    for (const auto& I : family) members.insert(I.mask);
    for (int j = 1; j <= s; ++j) {
        uint32_t bit = 1u << (j - 1);
        if (!members.count(bit)) {
            rep.holds_I = false;
            rep.witnesses.emplace_back(MultiIndex(bit), MultiIndex::empty());
        }
    }
    for (const auto& I : family) {
        for (uint32_t sub = (I.mask - 1) & I.mask; sub != 0; sub = (sub - 1) & I.mask) {
            if (!members.count(sub)) {
                rep.holds_II = false;
                rep.witnesses.emplace_back(I, MultiIndex(sub));
            }
        }
    }
    // members with K >= 1, grouped for the complementary-pair scan
    std::vector<MultiIndex> strict;
    for (const auto& I : family)
        if (K_of(I) >= 1) strict.push_back(I);
    for (size_t a = 0; a < strict.size(); ++a)
        for (size_t b = a + 1; b < strict.size(); ++b) {
            const MultiIndex &I = strict[a], &J = strict[b];
            if (I.disjoint_from(J) && I.size() + J.size() == n + 2) {
                rep.holds_III = false;
                rep.witnesses.emplace_back(I, J);
            }
        }
    return rep;
}

inline ConditionsReport check_conditions(const LinearSystemSpec& spec) {
    std::vector<MultiIndex> family;
    int max_size = spec.n() < spec.s() ? spec.n() : spec.s();
    for (int size = 1; size <= max_size; ++size)
        detail::enumerate_size(spec, size, 0, [&](const SubsetK& sk) { family.push_back(sk.I); });
    // Singletons always qualify for m_i >= 0, so (I) can only fail for
    // formal specs with negative multiplicities.
    return check_conditions_family(spec.n(), spec.s(), family,
                                   [&](const MultiIndex& I) { return k_value(spec, I).K; });
}

}  // namespace linsys
