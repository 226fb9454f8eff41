#pragma once

#include <string>

#include "linsys/dimension.hpp"

namespace linsys {

// The chambers in which the closed-form cohomology tables are proven.
// Exactly one tag applies; OUTSIDE carries no guarantee and is where the
// scan harness hunts for non-linear obstructions.
enum class Regime {
    EffectiveSmall,    // effective, s <= n+2
    EffectiveBounded,  // s >= n+3 under the bounded-multiplicity-sum condition
    Toric,             // s <= n+1, all m_i <= d+1 (effective or not)
    NoneffN2,          // s = n+2, non-effective chambers b = 1 or (b <= 0, max m = d+1)
    NoneffLarge,       // s >= n+3, non-effective, m_i <= d+1, b <= s-n-2
    Outside,
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::EffectiveSmall: return "EFFECTIVE_S_LE_N2";
        case Regime::EffectiveBounded: return "EFFECTIVE_BOUNDED";
        case Regime::Toric: return "TORIC";
        case Regime::NoneffN2: return "NONEFF_N2";
        case Regime::NoneffLarge: return "NONEFF_GE_N3";
        case Regime::Outside: return "OUTSIDE";
    }
    return "?";
}

enum class Effectivity { Effective, Empty, Unknown };

inline const char* effectivity_name(Effectivity e) {
    switch (e) {
        case Effectivity::Effective: return "effective";
        case Effectivity::Empty: return "empty";
        case Effectivity::Unknown: return "unknown";
    }
    return "?";
}

struct RegimeReport {
    Regime tag = Regime::Outside;
    Effectivity effective = Effectivity::Unknown;
    bool guaranteed = false;
    long long b = 0;    // of the zero-stripped system
    int s_d = 0;        // points of multiplicity exactly d, zeros stripped
    int s_stripped = 0;
    std::string chamber;  // which inequality admitted the tag
};

// Deterministic chamber classification, computed on the system with zero
// multiplicities stripped (they change nothing).  Effectivity is decided
// where the classification theorems decide it; a point of multiplicity
// >= d+1 forces emptiness outright.
inline RegimeReport classify_regime(const LinearSystemSpec& spec) {
    LinearSystemSpec t = spec.stripped_zeros();
    RegimeReport rep;
    rep.b = t.b();
    rep.s_d = t.count_mult(t.d());
    rep.s_stripped = t.s();
    const int n = t.n();
    const int s = t.s();
    const long long d = t.d();
    const long long mmax = t.max_mult();

    auto decide_outside_effectivity = [&]() {
        if (mmax >= d + 1) return Effectivity::Empty;
        if (s <= n + 2 && ldim(t) <= 0) return Effectivity::Empty;  // else h^0 = ldim >= 1 would hold
        return Effectivity::Unknown;
    };

    if (s <= n + 1 && mmax <= d + 1) {
        rep.tag = Regime::Toric;
        rep.effective = (rep.b <= 0 && mmax <= d) ? Effectivity::Effective : Effectivity::Empty;
        rep.chamber = "s<=n+1, m<=d+1";
    } else if (s == n + 2) {
        if (mmax <= d && rep.b <= 0) {
            rep.tag = Regime::EffectiveSmall;
            rep.effective = Effectivity::Effective;
            rep.chamber = "s=n+2, m<=d, b<=0";
        } else if (mmax <= d + 1 && rep.b == 1) {
            rep.tag = Regime::NoneffN2;
            rep.effective = Effectivity::Empty;
            rep.chamber = "s=n+2, b=1, m<=d+1";
        } else if (mmax == d + 1 && rep.b <= 0) {
            rep.tag = Regime::NoneffN2;
            rep.effective = Effectivity::Empty;
            rep.chamber = "s=n+2, b<=0, max m=d+1";
        } else {
            rep.tag = Regime::Outside;
            rep.effective = decide_outside_effectivity();
        }
    } else {  // s >= n+3
        long long bound = n - rep.s_d < s - n - 2 ? n - rep.s_d : s - n - 2;
        if (mmax <= d && rep.b <= bound) {
            rep.tag = Regime::EffectiveBounded;
            // The bound keeps the system linearly non-special; on its edge
            // the count can still be zero, so effectivity follows ldim.
            rep.effective = ldim(t) >= 1 ? Effectivity::Effective : Effectivity::Empty;
            rep.chamber = "s>=n+3, m<=d, sum m <= nd+min(n-s_d, s-n-2)";
        } else if (mmax == d + 1 && rep.b <= s - n - 2) {
            rep.tag = Regime::NoneffLarge;
            rep.effective = Effectivity::Empty;
            rep.chamber = "s>=n+3, max m=d+1, b<=s-n-2";
        } else {
            rep.tag = Regime::Outside;
            rep.effective = decide_outside_effectivity();
        }
    }
    rep.guaranteed = rep.tag != Regime::Outside;
    return rep;
}

}  // namespace linsys
